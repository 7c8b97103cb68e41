import { describe, expect, it } from "vitest";

import { FeatureNode, ModelInfo, SessionState } from "../src/api.js";
import { Actions, render, VNode } from "../src/render.js";
import { ViewState } from "../src/state.js";

const noop: Actions = {
  toggle: () => {},
  undo: () => {},
  reset: () => {},
  setLimit: () => {},
  fetchCompletions: () => {},
};

function feature(name: string, children: FeatureNode["children"] = [], optionality?: "mandatory" | "optional"): FeatureNode {
  return { type: "feature", name, children, ...(optionality ? { optionality } : {}) };
}

const XOR_TREE: FeatureNode = {
  type: "feature",
  name: "A",
  children: [{ type: "group", kind: "xor", members: [feature("B"), feature("C")] }],
};

const XOR_MODEL: ModelInfo = {
  id: "m1",
  root: "A",
  features: ["A", "B", "C"],
  tree: XOR_TREE,
  count: "2",
};

const XOR_INITIAL: SessionState = {
  features: [
    { name: "A", status: "selected", origin: "propagated" },
    { name: "B", status: "undecided", origin: "initial" },
    { name: "C", status: "undecided", origin: "initial" },
  ],
  count: "2",
  conflict: false,
  undoDepth: 0,
};

function view(overrides: Partial<ViewState> = {}): ViewState {
  return {
    model: XOR_MODEL,
    sessionId: "s1",
    session: XOR_INITIAL,
    completions: null,
    limit: 20,
    busy: false,
    notice: null,
    error: null,
    ...overrides,
  };
}

function strip(node: VNode | string): unknown {
  if (typeof node === "string") return node;
  return {
    tag: node.tag,
    attrs: node.attrs ?? {},
    children: (node.children ?? []).map(strip),
  };
}

function* walk(node: VNode | string): Generator<VNode> {
  if (typeof node === "string") return;
  yield node;
  for (const child of node.children ?? []) yield* walk(child);
}

function texts(node: VNode): string {
  return [...collectText(node)].join("");
}

function* collectText(node: VNode | string): Generator<string> {
  if (typeof node === "string") {
    yield node;
    return;
  }
  for (const child of node.children ?? []) yield* collectText(child);
}

function findAll(root: VNode, pred: (node: VNode) => boolean): VNode[] {
  return [...walk(root)].filter(pred);
}

function controlFor(root: VNode, name: string): VNode {
  const hits = findAll(root, (n) => n.tag === "button" && n.attrs?.["data-feature"] === name);
  expect(hits).toHaveLength(1);
  return hits[0]!;
}

describe("render", () => {
  it("is a pure function of the view state", () => {
    const a = render(view(), noop);
    const b = render(view(), noop);
    expect(strip(a)).toEqual(strip(b));
  });

  it("disables propagated features and labels their origin", () => {
    const tree = render(view(), noop);
    const a = controlFor(tree, "A");
    expect(a.attrs?.disabled).toBe("");
    expect(a.on).toBeUndefined();
    for (const name of ["B", "C"]) {
      const control = controlFor(tree, name);
      expect(control.attrs?.disabled).toBeUndefined();
      expect(control.on?.click).toBeTypeOf("function");
    }
    const badges = findAll(tree, (n) => n.attrs?.class === "badge propagated");
    expect(badges.map(texts)).toEqual(["propagated"]);
  });

  it("shows count and decision depth", () => {
    const text = texts(render(view(), noop));
    expect(text).toContain("configurations: 2");
    expect(text).toContain("decisions: 0");
  });

  it("labels group kinds", () => {
    const or: FeatureNode = {
      type: "feature",
      name: "A",
      children: [
        { type: "group", kind: "or", members: [feature("B"), feature("C")] },
        { type: "group", kind: "mutex", members: [feature("D"), feature("E")] },
      ],
    };
    const session: SessionState = {
      features: ["A", "B", "C", "D", "E"].map((name) => ({
        name,
        status: "undecided",
        origin: "initial",
      })),
      count: "12",
      conflict: false,
      undoDepth: 0,
    };
    const tree = render(view({ model: { ...XOR_MODEL, tree: or }, session }), noop);
    const labels = findAll(tree, (n) => n.attrs?.class === "badge group-kind").map(texts);
    expect(labels).toEqual(["1..*", "0..1"]);

    const xor = render(view(), noop);
    expect(findAll(xor, (n) => n.attrs?.class === "badge group-kind").map(texts)).toEqual(["1"]);
  });

  it("marks optional and mandatory children", () => {
    const tree: FeatureNode = feature("A", [feature("B", [], "mandatory"), feature("C", [], "optional")]);
    const session: SessionState = {
      features: ["A", "B", "C"].map((name) => ({ name, status: "undecided", origin: "initial" })),
      count: "2",
      conflict: false,
      undoDepth: 0,
    };
    const out = render(view({ model: { ...XOR_MODEL, tree }, session }), noop);
    const badges = findAll(out, (n) => n.attrs?.class === "badge optionality").map(texts);
    expect(badges).toEqual(["mandatory", "optional"]);
  });

  it("renders banners for errors and notices without touching the tree", () => {
    const out = render(view({ error: "decision rejected", notice: "C is deselected by propagation" }), noop);
    const banners = findAll(out, (n) => (n.attrs?.class ?? "").startsWith("banner"));
    expect(banners.map((n) => n.attrs?.class)).toEqual(["banner error", "banner notice"]);
    expect(banners.map(texts)).toEqual(["decision rejected", "C is deselected by propagation"]);
    expect(controlFor(out, "B")).toBeDefined();
  });

  it("renders a hint before anything is loaded", () => {
    const out = render(view({ model: null, session: null, sessionId: null }), noop);
    expect(texts(out)).toContain("paste a model");
    expect(findAll(out, (n) => n.tag === "button")).toHaveLength(0);
  });

  it("lists fetched configurations and flags truncation", () => {
    const out = render(
      view({ completions: { configurations: [["A", "B"], ["A", "C"]], truncated: true } }),
      noop,
    );
    const rows = findAll(out, (n) => n.tag === "li" && !n.attrs).map(texts);
    expect(rows).toEqual(["{A, B}", "{A, C}"]);
    const truncated = findAll(out, (n) => n.attrs?.class === "truncated");
    expect(truncated.map(texts)).toEqual(["more configurations not shown"]);
  });
});
