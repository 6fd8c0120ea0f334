import init, { cubeExplore, sensScan, verifyCliques, isotypic } from "./pkg/twocoset_web.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  out.classList.remove("error");
  try {
    return f();
  } catch (e) {
    out.classList.add("error");
    out.textContent = String(e.message ?? e);
  }
}

function drawCube(report) {
  const grid = $("cube-grid");
  grid.replaceChildren();
  for (const p of report.points) {
    const cell = document.createElement("div");
    cell.className = "cell" + (p.value ? " one" : "") + (p.point === 0 && p.sensitivity > 0 ? " sensitive" : "");
    cell.title = `sensitivity ${p.sensitivity}`;
    cell.textContent = p.point.toString(2).padStart(report.arity, "0");
    // clicking a point flips its bit in the table
    cell.onclick = () => {
      const t = BigInt($("cube-table").value) ^ (1n << BigInt(p.point));
      $("cube-table").value = t.toString();
      runCube();
    };
    grid.append(cell);
  }
}

function runCube() {
  const out = $("cube-out");
  show(out, () => {
    const r = JSON.parse(cubeExplore(Number($("cube-k").value), Number($("cube-table").value)));
    drawCube(r);
    out.textContent = `degree ${r.degree}, sensitivity at 0: ${r.points[0].sensitivity}\ncoefficients ${JSON.stringify(r.coefficients)}`;
  });
}

function runScan() {
  const out = $("cube-out");
  show(out, () => {
    const k = Number($("cube-k").value);
    const r = JSON.parse(sensScan(k, Number($("scan-s").value)));
    if (r.result === "witness") {
      $("cube-table").value = String(r.table);
      runCube();
      out.textContent += `\nscan witness: table ${r.table}`;
    } else {
      out.textContent = `no degree-2 function on {0,1}^${k} separates 0 from e_1..e_${$("scan-s").value}`;
    }
  });
}

function runCliques() {
  const out = $("clique-out");
  out.textContent = "searching...";
  setTimeout(() => show(out, () => {
    const r = JSON.parse(verifyCliques($("clique-kind").value, Number($("clique-n").value)));
    const lines = [
      `${r.vertices} vertices, ${r.edges} edges`,
      `clique number ${r.clique_number}, ${r.count} maximum cliques`,
      r.passed ? "every maximum clique is a 2-coset through the anchor" : `FAILED: ${r.failure}`,
      "",
      ...r.cliques.map((c, i) => `#${i}: ${JSON.stringify(c.slice(0, 4))}${c.length > 4 ? " ..." : ""}`),
    ];
    out.textContent = lines.join("\n");
  }), 0);
}

function runIsotypic() {
  const out = $("iso-out");
  const body = $("iso-table").querySelector("tbody");
  body.replaceChildren();
  show(out, () => {
    const r = JSON.parse(isotypic($("iso-in").value));
    for (const c of r.components) {
      const row = document.createElement("tr");
      for (const v of [`(${c.lambda.join(",")})`, c.dimension, c.norm_sq]) {
        const td = document.createElement("td");
        td.textContent = v;
        row.append(td);
      }
      body.append(row);
    }
    out.textContent = `${r.domain}, |F| = ${r.weight}, spectral degree ${r.spectral_degree}`;
  });
}

await init();
$("cube-run").onclick = runCube;
$("scan-run").onclick = runScan;
$("clique-run").onclick = runCliques;
$("iso-run").onclick = runIsotypic;
runCube();
