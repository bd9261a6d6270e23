import { describe, expect, it } from "vitest";

import { mapBrowserKey } from "../src/keymap.js";

const closed = { bufferValid: false, windowOpen: false, selected: null };
const validBuffer = { bufferValid: true, windowOpen: false, selected: null };
const window2 = { bufferValid: false, windowOpen: true, selected: 1 };

describe("mapBrowserKey", () => {
  it("maps letters", () => {
    expect(mapBrowserKey("m", closed)).toEqual({ kind: "letter", value: "m" });
    expect(mapBrowserKey("z", validBuffer)).toEqual({ kind: "letter", value: "z" });
  });

  it("ignores non-engine keys", () => {
    expect(mapBrowserKey("Escape", closed)).toBeNull();
    expect(mapBrowserKey("A", closed)).toBeNull();
    expect(mapBrowserKey("ß", closed)).toBeNull();
  });

  it("digits are tones only on a valid buffer", () => {
    expect(mapBrowserKey("1", validBuffer)).toEqual({ kind: "tone", tone: 1 });
    expect(mapBrowserKey("5", validBuffer)).toEqual({ kind: "tone", tone: 5 });
    expect(mapBrowserKey("1", closed)).toBeNull();
  });

  it("digits select candidates when the window is open", () => {
    expect(mapBrowserKey("2", window2)).toEqual({ kind: "select", index: 1 });
    expect(mapBrowserKey("9", window2)).toEqual({ kind: "select", index: 8 });
  });

  it("tone wins over selection when both would apply", () => {
    const both = { bufferValid: true, windowOpen: true, selected: 0 };
    expect(mapBrowserKey("3", both)).toEqual({ kind: "tone", tone: 3 });
  });

  it("space, backspace and navigation", () => {
    expect(mapBrowserKey(" ", closed)).toEqual({ kind: "delimiter" });
    expect(mapBrowserKey("Backspace", closed)).toEqual({ kind: "backspace" });
    expect(mapBrowserKey("ArrowDown", window2)).toEqual({ kind: "next" });
    expect(mapBrowserKey("ArrowUp", window2)).toEqual({ kind: "prev" });
    expect(mapBrowserKey("ArrowDown", closed)).toBeNull();
  });

  it("enter commits the highlighted candidate", () => {
    expect(mapBrowserKey("Enter", window2)).toEqual({ kind: "select", index: 1 });
    expect(mapBrowserKey("Enter", closed)).toBeNull();
  });
});
