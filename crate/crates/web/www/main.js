// Expects `wasm-pack build --target web --out-dir www/pkg` to have run.
import init, {
  render_element,
  compose_elements,
  power_element,
  root_chain,
  element_order,
} from "./pkg/nv_web.js";

const $ = (id) => document.getElementById(id);

function show(text, svgSource) {
  $("error").textContent = "";
  $("result").textContent = text;
  try {
    $("picture").innerHTML = render_element(svgSource ?? text);
  } catch (e) {
    $("picture").innerHTML = "";
  }
}

function guard(f) {
  return () => {
    try {
      f();
    } catch (e) {
      $("error").textContent = String(e);
    }
  };
}

await init();

$("draw").onclick = guard(() => show($("a").value));
$("order").onclick = guard(() => {
  $("result").textContent = element_order($("a").value);
  $("error").textContent = "";
});
$("compose").onclick = guard(() => show(compose_elements($("a").value, $("b").value)));
$("power").onclick = guard(() => show(power_element($("a").value, Number($("k").value))));
$("root").onclick = guard(() => {
  const text = root_chain(Number($("i").value));
  $("a").value = text;
  show(text);
});

show($("a").value);
