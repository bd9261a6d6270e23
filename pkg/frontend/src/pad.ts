// Typing pad controller: owns the client-side mirror of the server
// session and serializes keystrokes (one request in flight, the rest
// queued). No conversion logic lives here; the server event is applied
// verbatim.

import { ApiError, SessionClient } from "./api.js";
import type { KeyEvent, KeyRequest, PhoneticSyllable } from "./api.js";
import { mapBrowserKey } from "./keymap.js";

export type ConnectionStatus = "connecting" | "ready" | "error";

export interface PadState {
  sessionId: string | null;
  buffer: string;
  validation: "valid" | "valid_prefix" | "invalid";
  phoneticPortion: PhoneticSyllable[];
  candidates: string[];
  selected: number | null;
  output: string;
  status: ConnectionStatus;
  lastRejected: boolean;
}

const CANDIDATE_KEYS = new Set([
  " ", "Backspace", "Enter", "ArrowUp", "ArrowDown", "ArrowLeft", "ArrowRight",
]);

function isCandidateKey(key: string): boolean {
  return /^[a-z1-9]$/.test(key) || CANDIDATE_KEYS.has(key);
}

export class PadController {
  state: PadState = {
    sessionId: null,
    buffer: "",
    validation: "valid_prefix",
    phoneticPortion: [],
    candidates: [],
    selected: null,
    output: "",
    status: "connecting",
    lastRejected: false,
  };

  onChange: (state: PadState) => void = () => {};

  private queue: string[] = [];
  private inFlight = false;
  private idle: (() => void)[] = [];

  constructor(private client: SessionClient) {}

  async start(): Promise<void> {
    this.state.sessionId = await this.client.createSession();
    this.state.status = "ready";
    this.emit();
  }

  /** Queue a browser key. Mapping to an engine key happens when the key
   * is dequeued, so dual-use digits see the state left by the previous
   * response rather than a stale one. */
  handleBrowserKey(key: string): boolean {
    if (this.state.status !== "ready" || !isCandidateKey(key)) {
      return false;
    }
    this.queue.push(key);
    void this.pump();
    return true;
  }

  /** Resolves once every queued keystroke has been answered. */
  settled(): Promise<void> {
    if (!this.inFlight && this.queue.length === 0) {
      return Promise.resolve();
    }
    return new Promise((resolve) => this.idle.push(resolve));
  }

  private async pump(): Promise<void> {
    if (this.inFlight) {
      return;
    }
    const key = this.queue.shift();
    if (key === undefined) {
      this.idle.splice(0).forEach((fn) => fn());
      return;
    }
    const mapped = mapBrowserKey(key, {
      bufferValid: this.state.validation === "valid" && this.state.buffer.length > 0,
      windowOpen: this.state.candidates.length > 0,
      selected: this.state.selected,
    });
    if (mapped === null) {
      void this.pump();
      return;
    }
    this.inFlight = true;
    try {
      const event = await this.client.sendKey(this.state.sessionId!, mapped);
      this.apply(event);
    } catch (err) {
      if (err instanceof ApiError && err.status === 400) {
        // a key the server refuses outright behaves like a rejection
        this.state.lastRejected = true;
        this.emit();
      } else {
        this.state.status = "error";
        this.queue.length = 0;
        this.emit();
      }
    } finally {
      this.inFlight = false;
    }
    void this.pump();
  }

  private apply(event: KeyEvent): void {
    this.state.lastRejected = !event.accepted;
    if (event.accepted) {
      this.state.buffer = event.buffer;
      this.state.validation = event.validation;
      this.state.phoneticPortion = event.phonetic_portion;
      this.state.candidates = event.candidates;
      this.state.selected = event.selected;
      this.state.output += event.committed_delta;
    }
    this.emit();
  }

  private emit(): void {
    this.onChange(this.state);
  }
}

export function renderPad(state: PadState, root: {
  output: HTMLElement;
  strip: HTMLElement;
  buffer: HTMLElement;
  window: HTMLElement;
  banner: HTMLElement;
}): void {
  root.output.textContent = state.output;
  root.strip.textContent = state.phoneticPortion.map((s) => s.display).join(" ");
  root.buffer.textContent = state.buffer;
  root.buffer.className =
    state.validation === "valid" && state.buffer.length > 0 ? "buffer valid" : "buffer";
  if (state.lastRejected) {
    root.buffer.classList.add("flash");
  }
  root.window.innerHTML = "";
  state.candidates.forEach((hanzi, i) => {
    const item = document.createElement("span");
    item.textContent = `${i + 1}. ${hanzi}`;
    item.className = i === state.selected ? "candidate highlighted" : "candidate";
    root.window.appendChild(item);
  });
  root.banner.textContent =
    state.status === "error" ? "connection lost - input locked" : "";
  root.banner.style.display = state.status === "error" ? "block" : "none";
}
