// Browser keyboard events -> engine key requests.
//
// Digits are dual-use: with a fully valid buffer they are tone marks;
// with an open candidate window digits 1-9 pick the numbered candidate.

import type { KeyRequest } from "./api.js";

export interface KeyContext {
  bufferValid: boolean;
  windowOpen: boolean;
  selected: number | null;
}

export function mapBrowserKey(key: string, ctx: KeyContext): KeyRequest | null {
  if (key.length === 1 && key >= "a" && key <= "z") {
    return { kind: "letter", value: key };
  }
  if (key.length === 1 && key >= "1" && key <= "9") {
    const n = parseInt(key, 10);
    if (ctx.bufferValid && n <= 5) {
      return { kind: "tone", tone: n };
    }
    if (ctx.windowOpen) {
      return { kind: "select", index: n - 1 };
    }
    return null;
  }
  switch (key) {
    case " ":
      return { kind: "delimiter" };
    case "Backspace":
      return { kind: "backspace" };
    case "Enter":
      return ctx.windowOpen ? { kind: "select", index: ctx.selected ?? 0 } : null;
    case "ArrowDown":
    case "ArrowRight":
      return ctx.windowOpen ? { kind: "next" } : null;
    case "ArrowUp":
    case "ArrowLeft":
      return ctx.windowOpen ? { kind: "prev" } : null;
    default:
      return null;
  }
}
