import { SessionClient } from "./api.js";
import { PadController, renderPad } from "./pad.js";

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node;
}

export async function boot(): Promise<PadController> {
  const roots = {
    output: el("output"),
    strip: el("strip"),
    buffer: el("buffer"),
    window: el("candidates"),
    banner: el("banner"),
  };
  const controller = new PadController(new SessionClient());
  controller.onChange = (state) => renderPad(state, roots);

  document.addEventListener("keydown", (ev) => {
    if (ev.metaKey || ev.ctrlKey || ev.altKey) {
      return;
    }
    if (controller.handleBrowserKey(ev.key)) {
      ev.preventDefault();
    }
  });

  try {
    await controller.start();
  } catch {
    controller.state.status = "error";
    renderPad(controller.state, roots);
  }
  return controller;
}

if (typeof document !== "undefined" && document.getElementById("output")) {
  void boot();
}
