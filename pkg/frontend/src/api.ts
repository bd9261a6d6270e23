// Thin client for the hantype session service (see docs/api.md).

export interface PhoneticSyllable {
  base: string;
  tone: number;
  display: string;
}

export interface KeyEvent {
  accepted: boolean;
  buffer: string;
  validation: "valid" | "valid_prefix" | "invalid";
  phonetic_portion: PhoneticSyllable[];
  candidates: string[];
  selected: number | null;
  committed_delta: string;
}

export interface Snapshot {
  id: string;
  mode: string;
  layout: string;
  buffer: string;
  validation: "valid" | "valid_prefix" | "invalid";
  phonetic_portion: PhoneticSyllable[];
  candidates: string[];
  selected: number | null;
  output: string;
}

export type KeyRequest =
  | { kind: "letter"; value: string }
  | { kind: "tone"; tone: number }
  | { kind: "delimiter" }
  | { kind: "backspace" }
  | { kind: "select"; index: number }
  | { kind: "next" }
  | { kind: "prev" };

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(baseUrl: string, path: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(baseUrl + path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!resp.ok) {
    throw new ApiError(resp.status, `${init?.method ?? "GET"} ${path}: ${resp.status}`);
  }
  if (resp.status === 204) {
    return undefined as T;
  }
  return (await resp.json()) as T;
}

export class SessionClient {
  constructor(private baseUrl: string = "") {}

  async createSession(mode = "phonetic", layout = "pinyin"): Promise<string> {
    const body = await request<{ id: string }>(this.baseUrl, "/sessions", {
      method: "POST",
      body: JSON.stringify({ mode, layout }),
    });
    return body.id;
  }

  sendKey(id: string, key: KeyRequest): Promise<KeyEvent> {
    return request<KeyEvent>(this.baseUrl, `/sessions/${id}/keys`, {
      method: "POST",
      body: JSON.stringify(key),
    });
  }

  getState(id: string): Promise<Snapshot> {
    return request<Snapshot>(this.baseUrl, `/sessions/${id}`);
  }

  deleteSession(id: string): Promise<void> {
    return request<void>(this.baseUrl, `/sessions/${id}`, { method: "DELETE" });
  }
}
