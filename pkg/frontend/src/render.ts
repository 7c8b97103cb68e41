/** Pure view builder: ViewState in, a plain node tree out. No DOM access
 * here, so the same state always yields the same structure; `dom.ts`
 * turns the result into elements. */

import { FeatureEntry, FeatureNode, GroupKind, TreeNode } from "./api.js";
import { ViewState } from "./state.js";

export interface VNode {
  tag: string;
  attrs?: Record<string, string>;
  on?: Record<string, (event: Event) => void>;
  children?: (VNode | string)[];
}

export interface Actions {
  toggle(feature: string): void;
  undo(): void;
  reset(): void;
  setLimit(limit: number): void;
  fetchCompletions(): void;
}

const GROUP_LABELS: Record<GroupKind, string> = {
  xor: "1",
  or: "1..*",
  mutex: "0..1",
};

const STATUS_MARKS = { selected: "✓", deselected: "✕", undecided: "·" };

function h(tag: string, attrs?: VNode["attrs"], children?: VNode["children"], on?: VNode["on"]): VNode {
  const node: VNode = { tag };
  if (attrs && Object.keys(attrs).length) node.attrs = attrs;
  if (children && children.length) node.children = children;
  if (on && Object.keys(on).length) node.on = on;
  return node;
}

function featureRow(node: FeatureNode, byName: Map<string, FeatureEntry>, actions: Actions): VNode {
  const entry = byName.get(node.name);
  if (!entry) {
    return h("li", { class: "error" }, [`unknown feature ${node.name}`]);
  }
  const disabled = entry.origin === "propagated";
  const control = h(
    "button",
    {
      class: `tri ${entry.status}`,
      "data-feature": node.name,
      title: disabled ? "fixed by propagation" : `make ${cycleLabel(entry)}`,
      ...(disabled ? { disabled: "" } : {}),
    },
    [STATUS_MARKS[entry.status]],
    disabled ? undefined : { click: () => actions.toggle(node.name) },
  );
  const badges: VNode[] = [];
  if (entry.origin !== "initial") {
    badges.push(h("span", { class: `badge ${entry.origin}` }, [entry.origin]));
  }
  if (node.optionality) {
    badges.push(h("span", { class: "badge optionality" }, [node.optionality]));
  }
  return h("li", { class: `feature ${entry.status}` }, [
    control,
    h("span", { class: "name" }, [node.name]),
    ...badges,
    ...(node.children.length ? [children(node.children, byName, actions)] : []),
  ]);
}

function cycleLabel(entry: FeatureEntry): string {
  const next = { undecided: "selected", selected: "deselected", deselected: "undecided" };
  return next[entry.status];
}

function children(nodes: TreeNode[], byName: Map<string, FeatureEntry>, actions: Actions): VNode {
  return h(
    "ul",
    { class: "tree" },
    nodes.map((node) =>
      node.type === "feature"
        ? featureRow(node, byName, actions)
        : h("li", { class: `group ${node.kind}` }, [
            h("span", { class: "badge group-kind" }, [GROUP_LABELS[node.kind]]),
            children(node.members, byName, actions),
          ]),
    ),
  );
}

function sessionView(view: ViewState, actions: Actions): VNode[] {
  const { model, session } = view;
  if (!model || !session) return [];
  const byName = new Map(session.features.map((entry) => [entry.name, entry]));
  const header = h("header", { class: "session" }, [
    h("span", { class: "count" }, [`configurations: ${session.count}`]),
    h("span", { class: "undo-depth" }, [`decisions: ${session.undoDepth}`]),
    h("button", { class: "undo" }, ["undo"], { click: () => actions.undo() }),
    h("button", { class: "reset" }, ["reset"], { click: () => actions.reset() }),
  ]);
  const completions = view.completions
    ? h("ul", { class: "completions" }, [
        ...view.completions.configurations.map((names) =>
          h("li", {}, [`{${names.join(", ")}}`]),
        ),
        ...(view.completions.truncated
          ? [h("li", { class: "truncated" }, ["more configurations not shown"])]
          : []),
      ])
    : h("p", { class: "completions-empty" }, ["not fetched yet"]);
  const panel = h("section", { class: "panel" }, [
    h("label", {}, [
      "show up to ",
      h("input", { class: "limit", type: "number", min: "0", value: String(view.limit) }, undefined, {
        change: (event) => actions.setLimit(Number((event.target as HTMLInputElement).value)),
      }),
    ]),
    h("button", { class: "fetch" }, ["list configurations"], {
      click: () => actions.fetchCompletions(),
    }),
    completions,
  ]);
  return [header, children([model.tree], byName, actions), panel];
}

export function render(view: ViewState, actions: Actions): VNode {
  const parts: (VNode | string)[] = [];
  if (view.error) {
    parts.push(h("div", { class: "banner error", role: "alert" }, [view.error]));
  }
  if (view.notice) {
    parts.push(h("div", { class: "banner notice", role: "status" }, [view.notice]));
  }
  if (view.busy) {
    parts.push(h("div", { class: "busy" }, ["working"]));
  }
  parts.push(...sessionView(view, actions));
  if (!view.model && !view.error) {
    parts.push(h("p", { class: "hint" }, ["paste a model above and load it"]));
  }
  return h("main", { class: "view" }, parts);
}
