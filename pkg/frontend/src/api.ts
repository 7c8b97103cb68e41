/** Typed client for the configurator service. All state lives server-side;
 * this module only moves JSON and never interprets constraints. */

export type Status = "selected" | "deselected" | "undecided";
export type Origin = "user" | "propagated" | "initial";
export type GroupKind = "xor" | "or" | "mutex";

export interface FeatureEntry {
  name: string;
  status: Status;
  origin: Origin;
}

export interface SessionState {
  features: FeatureEntry[];
  count: string;
  conflict: boolean;
  undoDepth: number;
}

export interface FeatureNode {
  type: "feature";
  name: string;
  optionality?: "mandatory" | "optional";
  children: TreeNode[];
}

export interface GroupNode {
  type: "group";
  kind: GroupKind;
  members: FeatureNode[];
}

export type TreeNode = FeatureNode | GroupNode;

export interface ModelInfo {
  id: string;
  root: string;
  features: string[];
  tree: FeatureNode;
  count: string;
}

export interface Completions {
  configurations: string[][];
  truncated: boolean;
}

/** Error body of a rejected request, with the HTTP status attached. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly detail: Record<string, unknown> = {},
  ) {
    super(message);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(base + path, init);
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const message = typeof body.message === "string" ? body.message : response.statusText;
    throw new ApiError(response.status, message, body);
  }
  return body as T;
}

function post(body?: unknown): RequestInit {
  return body === undefined
    ? { method: "POST" }
    : {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      };
}

export class Api {
  constructor(readonly base: string = "") {}

  loadModel(source: string): Promise<ModelInfo> {
    return request(this.base, "/api/models", post({ source }));
  }

  openSession(modelId: string): Promise<{ sessionId: string; state: SessionState }> {
    return request(this.base, `/api/models/${modelId}/sessions`, post());
  }

  decide(sessionId: string, feature: string, decision: Status): Promise<SessionState> {
    return request(this.base, `/api/sessions/${sessionId}/decide`, post({ feature, decision }));
  }

  undo(sessionId: string): Promise<SessionState> {
    return request(this.base, `/api/sessions/${sessionId}/undo`, post());
  }

  reset(sessionId: string): Promise<SessionState> {
    return request(this.base, `/api/sessions/${sessionId}/reset`, post());
  }

  configurations(sessionId: string, limit: number): Promise<Completions> {
    return request(this.base, `/api/sessions/${sessionId}/configurations?limit=${limit}`);
  }
}
