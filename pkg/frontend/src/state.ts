/** Client-side view state: a verbatim copy of the last server state plus
 * transient UI concerns (notices, errors, the in-flight guard).
 *
 * The client never computes propagation or counts. Session state enters
 * through exactly one door (`accept`), which validates the payload shape
 * and stores it untouched; everything rendered is traceable to it. */

import {
  Api,
  ApiError,
  Completions,
  ModelInfo,
  SessionState,
  Status,
} from "./api.js";

export interface ViewState {
  model: ModelInfo | null;
  sessionId: string | null;
  /** Last accepted server state, verbatim. */
  session: SessionState | null;
  completions: Completions | null;
  limit: number;
  /** True while a request is in flight; further actions are ignored. */
  busy: boolean;
  /** Non-blocking notice (rejected decision, network hiccup). */
  notice: string | null;
  /** Blocking banner (parse errors, malformed payloads). */
  error: string | null;
}

export type Listener = (view: ViewState) => void;

const CYCLE: Record<Status, Status> = {
  undecided: "selected",
  selected: "deselected",
  deselected: "undecided",
};

function validStatus(value: unknown): value is Status {
  return value === "selected" || value === "deselected" || value === "undecided";
}

function validSession(payload: unknown): payload is SessionState {
  if (typeof payload !== "object" || payload === null) return false;
  const state = payload as Record<string, unknown>;
  if (typeof state.count !== "string") return false;
  if (typeof state.conflict !== "boolean") return false;
  if (typeof state.undoDepth !== "number") return false;
  if (!Array.isArray(state.features) || state.features.length === 0) return false;
  return state.features.every(
    (entry) =>
      typeof entry === "object" &&
      entry !== null &&
      typeof entry.name === "string" &&
      validStatus(entry.status) &&
      typeof entry.origin === "string",
  );
}

function validModel(payload: ModelInfo): boolean {
  return (
    typeof payload.id === "string" &&
    payload.tree !== null &&
    typeof payload.tree === "object" &&
    payload.tree.type === "feature" &&
    typeof payload.tree.name === "string"
  );
}

export class Store {
  private view: ViewState = {
    model: null,
    sessionId: null,
    session: null,
    completions: null,
    limit: 20,
    busy: false,
    notice: null,
    error: null,
  };
  private listeners: Listener[] = [];

  constructor(private readonly api: Api) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
    listener(this.view);
  }

  get state(): ViewState {
    return this.view;
  }

  private emit(changes: Partial<ViewState>): void {
    this.view = { ...this.view, ...changes };
    for (const listener of this.listeners) listener(this.view);
  }

  /** The only writer of `session`: shape-check, then store verbatim. */
  private accept(payload: SessionState): void {
    if (!validSession(payload)) {
      this.emit({ error: "malformed state from server", notice: null });
      return;
    }
    this.emit({ session: payload, notice: null, error: null });
  }

  /** Serialize mutating requests: one at a time, extras ignored. */
  private async guarded(work: () => Promise<void>): Promise<void> {
    if (this.view.busy) return;
    this.emit({ busy: true });
    try {
      await work();
    } finally {
      this.emit({ busy: false });
    }
  }

  async load(source: string): Promise<void> {
    await this.guarded(async () => {
      try {
        const model = await this.api.loadModel(source);
        if (!validModel(model)) {
          this.emit({ error: "malformed model from server" });
          return;
        }
        const opened = await this.api.openSession(model.id);
        this.emit({
          model,
          sessionId: opened.sessionId,
          completions: null,
          notice: null,
          error: null,
        });
        this.accept(opened.state);
      } catch (failure) {
        this.emit({ error: describeLoadFailure(failure) });
      }
    });
  }

  /** Request a decision; without an explicit target, cycle the feature's
   * current status: undecided -> selected -> deselected -> undecided. */
  async toggle(feature: string, explicit?: Status): Promise<void> {
    const { session, sessionId } = this.view;
    if (!session || !sessionId) return;
    const entry = session.features.find((f) => f.name === feature);
    if (!entry) return;
    const desired = explicit ?? CYCLE[entry.status];
    await this.guarded(async () => {
      try {
        const next = await this.api.decide(sessionId, feature, desired);
        if (next.conflict) {
          // the server reported but did not retain it; keep our state too
          this.emit({ error: "decision rejected", notice: null });
          return;
        }
        this.accept(next);
      } catch (failure) {
        if (failure instanceof ApiError && failure.status === 409) {
          this.emit({ notice: failure.message });
          return;
        }
        this.emit({ notice: "network error, state unchanged; retry" });
      }
    });
  }

  async undo(): Promise<void> {
    await this.sessionCall((sessionId) => this.api.undo(sessionId));
  }

  async reset(): Promise<void> {
    await this.sessionCall((sessionId) => this.api.reset(sessionId));
  }

  private async sessionCall(call: (sessionId: string) => Promise<SessionState>): Promise<void> {
    const { sessionId } = this.view;
    if (!sessionId) return;
    await this.guarded(async () => {
      try {
        this.accept(await call(sessionId));
      } catch {
        this.emit({ notice: "network error, state unchanged; retry" });
      }
    });
  }

  setLimit(limit: number): void {
    if (Number.isInteger(limit) && limit >= 0) this.emit({ limit });
  }

  async fetchCompletions(): Promise<void> {
    const { sessionId, limit } = this.view;
    if (!sessionId) return;
    await this.guarded(async () => {
      try {
        const completions = await this.api.configurations(sessionId, limit);
        this.emit({ completions, notice: null });
      } catch {
        this.emit({ notice: "network error, state unchanged; retry" });
      }
    });
  }
}

function describeLoadFailure(failure: unknown): string {
  if (failure instanceof ApiError) {
    const { line, column } = failure.detail;
    if (typeof line === "number" && typeof column === "number") {
      return `line ${line}, column ${column}: ${failure.message}`;
    }
    return failure.message;
  }
  return "network error, nothing loaded; retry";
}
