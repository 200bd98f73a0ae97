import init, { catalog, eigenvalue, spectrum, verify } from "./pkg/symdirac_web.js";

const $ = (id) => document.getElementById(id);

function space() {
  const source = document.querySelector("input[name=source]:checked").value;
  return source === "catalog" ? $("catalog").value : $("doc").value;
}

function show(run) {
  const out = $("out");
  try {
    out.className = "";
    out.textContent = run();
  } catch (e) {
    out.className = "error";
    out.textContent = e.message ?? String(e);
  }
}

await init();

for (const entry of JSON.parse(catalog())) {
  const opt = document.createElement("option");
  opt.value = entry.name;
  opt.textContent = `${entry.name}  ${entry.g}/${entry.k}  n=${entry.n}${entry.spin ? "" : "  (not spin)"}`;
  $("catalog").append(opt);
}
$("catalog").value = "sphere-even(2)";

$("eigenvalue").onclick = () => show(() => eigenvalue(space(), $("json").checked));
$("spectrum").onclick = () => show(() => spectrum(space(), $("cutoff").value, $("json").checked));
$("verify").onclick = () => show(() => verify(space()));
