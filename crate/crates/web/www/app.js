import init, { catalogs, classify, draw_gluing, center_rank } from "./pkg/genuscenter_web.js";

const $ = (id) => document.getElementById(id);
const CASES = { 1: "disjoint", 2: "interleaved", 3: "nested" };

function fail(target, err) {
  target.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(err);
  target.append(p);
}

function showGluing() {
  const sigma = $("sigma").value;
  try {
    const c = JSON.parse(classify(sigma));
    $("drawing").innerHTML = draw_gluing(sigma);
    const names = c.orbits.map((o, i) => `[${i + 1}] = {${o[0]}, ${o[1]}}`);
    let html = `<p>genus ${c.surface.g}, punctures ${c.surface.k}, Euler characteristic ${c.surface.euler}</p>`;
    html += `<p>${names.join("<br>")}</p>`;
    if (c.n > 1) {
      html += "<table><tr><th></th>" + c.orbits.map((_, j) => `<th>[${j + 1}]</th>`).join("") + "</tr>";
      c.comm.forEach((row, i) => {
        html += `<tr><th>[${i + 1}]</th>` + row.map((v) => `<td>${v ? CASES[v] : "-"}</td>`).join("") + "</tr>";
      });
      html += "</table>";
    }
    $("classification").innerHTML = html;
  } catch (e) {
    $("drawing").innerHTML = "";
    fail($("classification"), e);
  }
}

function showRank() {
  const out = $("rank");
  out.textContent = "computing...";
  // let the message paint before the blocking computation
  setTimeout(() => {
    try {
      const t0 = performance.now();
      const r = JSON.parse(center_rank($("cat").value, $("rank-sigma").value));
      const ms = (performance.now() - t0).toFixed(0);
      out.innerHTML =
        `<p>${r.category} on ${r.sigma} (genus ${r.surface.g}, punctures ${r.surface.k})</p>` +
        `<p><strong>rank ${r.rank}</strong>, block sizes ${r.block_dims.join(", ")}, ` +
        `tube algebra dimension ${r.total_dim} (${ms} ms)</p>`;
    } catch (e) {
      fail(out, e);
    }
  }, 20);
}

await init();
for (const c of JSON.parse(catalogs())) {
  const opt = document.createElement("option");
  opt.value = c.key;
  opt.textContent = `${c.key} (${c.labels.join(", ")})${c.modular ? ", modular" : ""}`;
  $("cat").append(opt);
}
$("cat").value = "fibonacci";
$("gluing-form").addEventListener("submit", (e) => { e.preventDefault(); showGluing(); });
$("rank-form").addEventListener("submit", (e) => { e.preventDefault(); showRank(); });
showGluing();
