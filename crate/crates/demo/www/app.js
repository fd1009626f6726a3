import init, {
  fixture_names, fixture, analyze_graph, draw_svg, realize_boundary, enumerate_counts,
} from "./pkg/ctmgraph_demo.js";

const $ = (id) => document.getElementById(id);

function show(el, fn) {
  el.classList.remove("error");
  try {
    el.textContent = fn();
  } catch (e) {
    el.classList.add("error");
    el.textContent = String(e.message ?? e);
  }
}

function draw(text) {
  try {
    $("drawing").innerHTML = draw_svg(text);
  } catch (e) {
    $("drawing").textContent = "";
  }
}

function pretty(json) {
  return JSON.stringify(JSON.parse(json), null, 2);
}

await init();

for (const name of JSON.parse(fixture_names())) {
  const opt = document.createElement("option");
  opt.value = opt.textContent = name;
  $("fixture").append(opt);
}

function loadFixture() {
  $("doc").value = fixture($("fixture").value);
  draw($("doc").value);
  show($("result"), () => pretty(analyze_graph($("doc").value)));
}

$("fixture").value = "k33";
$("fixture").addEventListener("change", loadFixture);
$("analyze").addEventListener("click", () => {
  draw($("doc").value);
  show($("result"), () => pretty(analyze_graph($("doc").value)));
});
$("realize").addEventListener("click", () => {
  show($("result"), () => {
    const r = JSON.parse(realize_boundary($("doc").value));
    const doc = JSON.stringify(r.graph);
    draw(doc);
    return `${r.vertices} vertices, ${r.external_legs} legs, boundary matches: ${r.boundary_matches}\n${doc}`;
  });
});
$("count").addEventListener("click", () => {
  show($("counts"), () => {
    const c = JSON.parse(enumerate_counts(Number($("colors").value), Number($("vertices").value)));
    return c.connected
      .map((n, k) => `${2 * (k + 1)} vertices: ${n} connected, ${c.all[k]} total`)
      .join("\n");
  });
});
loadFixture();
