/** End-to-end: drive the real configurator service with the Store and
 * assert what a user would see. Needs the backend package installed
 * (`pip install -e ../.`); the suite boots its own server on a free port. */

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Api } from "../src/api.js";
import { Actions, render, VNode } from "../src/render.js";
import { Store } from "../src/state.js";

const PORT = 3000 + Math.floor(Math.random() * 30000);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  const deadline = Date.now() + 30_000;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/api/models`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ source: "FM (Probe : ;)" }),
      });
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error(`service did not come up on ${BASE}`);
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "fam.cli", "serve", "--host", "127.0.0.1", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForServer();
}, 40_000);

afterAll(() => {
  server.kill();
});

const noop: Actions = {
  toggle: () => {},
  undo: () => {},
  reset: () => {},
  setLimit: () => {},
  fetchCompletions: () => {},
};

function* walk(node: VNode | string): Generator<VNode> {
  if (typeof node === "string") return;
  yield node;
  for (const child of node.children ?? []) yield* walk(child);
}

function text(node: VNode | string): string {
  if (typeof node === "string") return node;
  return (node.children ?? []).map(text).join("");
}

function entry(store: Store, name: string) {
  const found = store.state.session?.features.find((f) => f.name === name);
  expect(found, `feature ${name} present`).toBeDefined();
  return found!;
}

describe("configurator flow against the live service", () => {
  it("loads, decides, gets rejected, and undoes like a user would", async () => {
    const store = new Store(new Api(BASE));

    await store.load("FM (A : (B|C) ;)");
    expect(store.state.error).toBeNull();
    expect(store.state.model?.root).toBe("A");
    expect(store.state.session?.count).toBe("2");
    expect(entry(store, "A")).toEqual({ name: "A", status: "selected", origin: "propagated" });
    expect(entry(store, "B").status).toBe("undecided");
    const opening = store.state.session;

    // picking one xor member forces the other out
    await store.toggle("B");
    expect(store.state.session?.count).toBe("1");
    expect(entry(store, "B")).toEqual({ name: "B", status: "selected", origin: "user" });
    expect(entry(store, "C")).toEqual({ name: "C", status: "deselected", origin: "propagated" });
    expect(store.state.session?.undoDepth).toBe(1);

    // what the user sees: C's control is off, marked as propagated
    const tree = render(store.state, noop);
    const control = [...walk(tree)].find((n) => n.attrs?.["data-feature"] === "C");
    expect(control?.attrs?.disabled).toBe("");
    expect(control?.attrs?.title).toBe("fixed by propagation");
    const row = [...walk(tree)].find((n) => n.attrs?.class === "feature deselected");
    expect(row && text(row)).toContain("propagated");
    const count = [...walk(tree)].find((n) => n.attrs?.class === "count");
    expect(count && text(count)).toBe("configurations: 1");

    // contradicting the propagation is refused, nothing moves
    const before = store.state.session;
    await store.toggle("C", "selected");
    expect(store.state.notice).toMatch(/C/);
    expect(store.state.session).toBe(before);

    // the one remaining configuration
    store.setLimit(5);
    await store.fetchCompletions();
    expect(store.state.completions).toEqual({ configurations: [["A", "B"]], truncated: false });

    // undo returns to the opening state, as the server tells it
    await store.undo();
    expect(store.state.session).toEqual(opening);
    expect(store.state.session?.undoDepth).toBe(0);
  }, 30_000);

  it("surfaces parse errors with their position", async () => {
    const store = new Store(new Api(BASE));
    await store.load("FM (A : [B ;)");
    expect(store.state.error).toMatch(/line \d+, column \d+: /);
    expect(store.state.session).toBeNull();
  });

  it("keeps sessions independent", async () => {
    const first = new Store(new Api(BASE));
    const second = new Store(new Api(BASE));
    await first.load("FM (A : [B] ;)");
    await second.load("FM (A : [B] ;)");
    await first.toggle("B");
    expect(entry(first, "B").status).toBe("selected");
    expect(entry(second, "B").status).toBe("undecided");
  });
});
