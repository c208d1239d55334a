import init, { expandReport, classifyReport, patternReport, patternNames } from "./pkg/mixspec_web.js";

const SVG = "http://www.w3.org/2000/svg";
const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

function el(tag, attrs = {}, text) {
  const e = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  if (text !== undefined) e.textContent = text;
  return e;
}

function svgEl(tag, attrs) {
  const e = document.createElementNS(SVG, tag);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  return e;
}

// Vertices on a circle; cells of an extension are kept contiguous so they read as arcs.
function drawGraph(view, size = 320) {
  const svg = svgEl("svg", { width: size, height: size, viewBox: `0 0 ${size} ${size}` });
  const n = view.order;
  const c = size / 2;
  const rad = n === 1 ? 0 : c - 20;
  const pos = Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return [c + rad * Math.cos(a), c + rad * Math.sin(a)];
  });
  for (const [u, v] of view.edges) {
    svg.append(svgEl("line", { x1: pos[u][0], y1: pos[u][1], x2: pos[v][0], y2: pos[v][1], stroke: "#999", "stroke-width": 1 }));
  }
  pos.forEach(([x, y], i) => {
    const cell = view.cells.length ? view.cells[i] : 0;
    const dot = svgEl("circle", { cx: x, cy: y, r: n > 30 ? 4 : 7, fill: PALETTE[cell % PALETTE.length] });
    const title = svgEl("title", {});
    title.textContent = view.cells.length ? `vertex ${i}, cell ${cell}` : `vertex ${i}`;
    dot.append(title);
    svg.append(dot);
  });
  return svg;
}

function census(s) {
  const t = el("table", { class: "census" });
  const head = el("tr");
  const row = el("tr");
  const cols = [["n", s.order], ["mult 0", s.m0], ["mult -1", s.m_neg1], ["> 0", s.n_pos], ["< -1", s.n_lt_neg1], ["in (-1, 0)", s.n_between]];
  for (const [k, v] of cols) {
    head.append(el("th", {}, k));
    row.append(el("td", {}, String(v)));
  }
  t.append(head, row);
  return t;
}

function matrix(rows) {
  return el("pre", {}, rows.map((r) => r.map((x) => x.padStart(3)).join(" ")).join("\n"));
}

function show(target, build) {
  target.replaceChildren();
  try {
    build(target);
  } catch (e) {
    target.append(el("p", { class: "err" }, String(e.message ?? e)));
  }
}

function renderExpansion(out, x) {
  out.append(el("p", {}, `graph6 ${x.graph.graph6}, type ${x.ext_type}, ${x.in_class_g ? "in" : "not in"} the class`));
  out.append(census(x.spectrum));
  out.append(drawGraph(x.graph));
  out.append(el("p", {}, "Quotient matrix"));
  out.append(matrix(x.quotient));
}

document.getElementById("expand-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  show(document.getElementById("expand-out"), (out) => {
    const base = document.getElementById("expand-base").value;
    const type = document.getElementById("expand-type").value;
    renderExpansion(out, JSON.parse(expandReport(base, type)));
  });
});

document.getElementById("classify-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  show(document.getElementById("classify-out"), (out) => {
    const r = JSON.parse(classifyReport(document.getElementById("classify-graph").value));
    out.append(el("p", {}, `graph6 ${r.graph.graph6}, ${r.in_class_g ? "in" : "not in"} the class` +
      (r.subclass.in_g0 ? ", no isolated vertices" : "") + (r.subclass.in_gpp ? ", two positive eigenvalues" : "")));
    out.append(census(r.spectrum));
    out.append(drawGraph(r.graph));
    if (r.labels.length) {
      const ul = el("ul");
      for (const l of r.labels) ul.append(el("li", {}, `${l.family}: ${l.text}`));
      out.append(el("p", {}, "Families"), ul);
    }
    if (r.witnesses.length) {
      const ul = el("ul");
      for (const w of r.witnesses) ul.append(el("li", {}, `${w.name} on vertices ${w.vertices.join(", ")}`));
      out.append(el("p", {}, "Forbidden induced subgraphs"), ul);
    }
  });
});

document.getElementById("pattern-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  show(document.getElementById("pattern-out"), (out) => {
    const v = (id) => parseInt(document.getElementById(id).value, 10);
    const r = JSON.parse(patternReport(document.getElementById("pattern-name").value, v("pp"), v("pq"), v("pr"), v("ps")));
    out.append(el("pre", {},
      `det Q       = ${r.formula_det_q}\n            = ${r.det_q}\n` +
      `det (Q + I) = ${r.formula_det_q_plus_i}\n            = ${r.det_q_plus_i}`));
    if (r.direct) {
      const ok = r.direct[0] === r.det_q && r.direct[1] === r.det_q_plus_i;
      out.append(el("p", {}, `Direct determinants ${r.direct[0]}, ${r.direct[1]} ${ok ? "agree" : "DISAGREE"}`));
      renderExpansion(out, r.expansion);
    } else {
      out.append(el("p", {}, "Extension has more than 62 vertices; only the formulas are evaluated."));
    }
  });
});

await init();
const select = document.getElementById("pattern-name");
for (const name of JSON.parse(patternNames())) select.append(el("option", { value: name }, name));
