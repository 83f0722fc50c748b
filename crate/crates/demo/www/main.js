import init, { familyView, solveExact, checkColoring } from "./pkg/tdtc_demo.js";

const $ = (id) => document.getElementById(id);
const SVG = "http://www.w3.org/2000/svg";
let current = null;

function palette(k) {
  return `hsl(${(k * 137.5) % 360}, 65%, 72%)`;
}

function params() {
  return [$("family").value, Number($("n").value)];
}

function draw(view) {
  current = view;
  const svg = $("canvas");
  svg.replaceChildren();
  for (const [a, b] of view.links) {
    const l = document.createElementNS(SVG, "line");
    const p = view.nodes[a], q = view.nodes[b];
    l.setAttribute("x1", p.x); l.setAttribute("y1", p.y);
    l.setAttribute("x2", q.x); l.setAttribute("y2", q.y);
    svg.append(l);
  }
  view.nodes.forEach((node, i) => {
    const c = document.createElementNS(SVG, "circle");
    c.setAttribute("cx", node.x); c.setAttribute("cy", node.y);
    c.setAttribute("r", node.id.startsWith("v") ? 0.022 : 0.017);
    c.setAttribute("fill", palette(node.class));
    c.dataset.id = node.id;
    c.addEventListener("click", () => {
      node.class = (node.class + 1) % (view.classes + 1);
      c.setAttribute("fill", palette(node.class));
    });
    svg.append(c);
    const t = document.createElementNS(SVG, "text");
    t.setAttribute("x", node.x); t.setAttribute("y", node.y);
    t.textContent = node.id;
    svg.append(t);
  });
  $("facts").innerHTML = `
    <tr><td>${view.title}</td><td>${view.classes} classes (${view.provenance})</td></tr>
    <tr><td>χ<sup>tt</sup><sub>d</sub> = ${view.chi_tt_d.value}</td><td>${view.chi_tt_d.case}</td></tr>
    <tr><td>γ<sub>tm</sub> = ${view.gamma_tm.value}</td><td>${view.gamma_tm.case}</td></tr>
    <tr><td>α<sub>mix</sub> = ${view.alpha_mix.value}</td><td>${view.alpha_mix.case}</td></tr>`;
}

function guard(f) {
  try {
    f();
  } catch (e) {
    $("status").textContent = String(e.message ?? e);
  }
}

function mark(bad) {
  for (const c of $("canvas").querySelectorAll("circle")) {
    c.classList.toggle("bad", bad.has(c.dataset.id));
  }
}

await init();

$("show").onclick = () => guard(() => {
  draw(JSON.parse(familyView(...params())));
  $("status").textContent = "";
});

$("solve").onclick = () => guard(() => {
  const r = JSON.parse(solveExact(...params(), Number($("budget").value)));
  draw(r);
  $("status").textContent = r.proven_optimal
    ? `optimal: ${r.classes} classes after ${r.nodes_explored} search nodes`
    : `budget ran out after ${r.nodes_explored} nodes; best found has ${r.classes} classes`;
});

$("check").onclick = () => guard(() => {
  if (!current) return;
  const classes = JSON.stringify(current.nodes.map((n) => n.class));
  const r = JSON.parse(checkColoring(...params(), classes));
  const bad = new Set(r.undominated);
  if (r.conflict) r.conflict.forEach((id) => bad.add(id));
  mark(bad);
  $("status").textContent = r.valid
    ? `valid with ${r.classes} classes`
    : `invalid: ${r.violation}`;
});

$("show").click();
