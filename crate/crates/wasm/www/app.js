import init, { evaluate, sweep, compare, presets } from "./pkg/litigacost_wasm.js";

const $ = (id) => document.getElementById(id);
const AMOUNTS = ["claim", "plaintiff_trial_cost", "defendant_trial_cost", "plaintiff_settle_cost", "defendant_settle_cost"];

// Indicator pairs are two-state switches, so kb/ka and t_long/t_short can never both be set.
const pairs = { predictability: "kb", duration: "t_long" };

function scenario() {
  const s = { id: "what-if", currency: "EUR", confirmation: ($("confirmation").value / 1000).toFixed(3) };
  for (const f of AMOUNTS) s[f] = $(f).value.trim();
  s.indicators = {
    z: $("z").checked ? 1 : 0,
    y: $("y").checked ? 1 : 0,
    kb: pairs.predictability === "kb" ? 1 : 0,
    ka: pairs.predictability === "ka" ? 1 : 0,
    t_long: pairs.duration === "t_long" ? 1 : 0,
    t_short: pairs.duration === "t_short" ? 1 : 0,
  };
  return JSON.stringify(s);
}

function policy() {
  return JSON.stringify({ plaintiff_settle_threshold: $("plaintiff_settle_threshold").value.trim() });
}

function showErrors(envelope) {
  document.querySelectorAll(".field-error").forEach((el) => el.classList.remove("field-error"));
  if (envelope.ok) { $("errors").textContent = ""; return false; }
  $("errors").textContent = envelope.errors.map((e) => `${e.field_path || "input"}: ${e.message}`).join("\n");
  for (const e of envelope.errors) {
    const el = $(e.field_path.split(".")[0]);
    if (el) el.classList.add("field-error");
  }
  return true;
}

function badge(el, text, good) {
  el.textContent = text;
  el.className = "badge " + (good ? "good" : "bad");
}

function refreshResult() {
  const r = JSON.parse(evaluate(scenario(), policy()));
  if (showErrors(r)) return;
  const v = r.result;
  $("c_fr").textContent = v.risk_coefficient;
  $("tc").textContent = v.tc;
  $("tc_fraction").textContent = v.tc_fraction_of_claim;
  $("gain").textContent = v.settlement_gain;
  badge($("plaintiff"), v.plaintiff_action, v.plaintiff_action === "Litigate");
  badge($("defendant"), v.defendant_action, v.defendant_action === "ProposeSettlement");
  $("implausible").hidden = !v.implausible;
}

function refreshChart() {
  const svg = $("chart");
  const r = JSON.parse(sweep(scenario(), policy(), $("sweep-min").value, $("sweep-max").value, Number($("sweep-steps").value)));
  if (!r.ok) { svg.innerHTML = `<text x="20" y="30" fill="#a00">${r.errors[0].message}</text>`; return; }
  const pts = r.result.points.map((p) => [Number(p.parameter_value), Number(p.tc_fraction), p]);
  const [w, h, pad] = [640, 260, 40];
  const xs = pts.map((p) => p[0]), ys = pts.map((p) => p[1]).concat([0]);
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  let [y0, y1] = [Math.min(...ys), Math.max(...ys)];
  if (y0 === y1) y1 = y0 + 1;
  const X = (x) => pad + ((x - x0) / (x1 - x0)) * (w - 2 * pad);
  const Y = (y) => h - pad - ((y - y0) / (y1 - y0)) * (h - 2 * pad);
  const line = pts.map((p) => `${X(p[0]).toFixed(1)},${Y(p[1]).toFixed(1)}`).join(" ");
  const dots = pts
    .map((p) => `<circle cx="${X(p[0])}" cy="${Y(p[1])}" r="3" fill="${p[2].plaintiff_action === "Litigate" ? "#2a7" : "#c33"}"><title>f=${p[2].parameter_value} TC=${p[2].tc} (${p[2].tc_fraction})</title></circle>`)
    .join("");
  svg.innerHTML = `
    <line x1="${pad}" y1="${Y(0)}" x2="${w - pad}" y2="${Y(0)}" stroke="#bbb"/>
    <polyline points="${line}" fill="none" stroke="#334" stroke-width="1.5"/>${dots}
    <text x="${pad}" y="${h - 10}">${x0.toFixed(2)}</text>
    <text x="${w - pad - 30}" y="${h - 10}">${x1.toFixed(2)}</text>
    <text x="4" y="${Y(y1) + 4}">${y1.toFixed(2)}</text>
    <text x="4" y="${Y(y0) + 4}">${y0.toFixed(2)}</text>
    <text x="${w / 2 - 80}" y="${h - 10}">confirmed share &rarr; TC / claim</text>`;
}

function refreshComparison() {
  const r = JSON.parse(compare(scenario(), $("before").value, $("after").value));
  if (!r.ok) return;
  const c = r.result;
  $("cfr-before").textContent = c.risk_coefficient_before;
  $("cfr-after").textContent = c.risk_coefficient_after;
  $("tc-before").textContent = c.tc_before;
  $("tc-after").textContent = c.tc_after;
  $("delta").textContent = c.delta;
  $("delta").style.color = c.delta.startsWith("-") ? "#2a7" : "#c33";
  badge($("verdict"), c.verdict, c.verdict === "ReformEffective");
}

function refresh() {
  $("confirmation-out").textContent = ($("confirmation").value / 10).toFixed(1) + "%";
  refreshResult();
  refreshChart();
  refreshComparison();
}

async function main() {
  await init();
  const names = JSON.parse(presets()).result.map((p) => p.name);
  for (const [id, chosen] of [["before", "BG-pre-reform"], ["after", "reformed"]]) {
    $(id).innerHTML = names.map((n) => `<option ${n === chosen ? "selected" : ""}>${n}</option>`).join("");
  }
  document.querySelectorAll(".switch").forEach((sw) => {
    sw.addEventListener("click", (ev) => {
      const value = ev.target.dataset.value;
      if (!value) return;
      pairs[sw.dataset.pair] = value;
      sw.querySelectorAll("button").forEach((b) => b.classList.toggle("on", b.dataset.value === value));
      refresh();
    });
  });
  document.querySelectorAll("input, select").forEach((el) => el.addEventListener("input", refresh));
  refresh();
}

main();
