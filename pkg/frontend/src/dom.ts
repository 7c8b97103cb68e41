/** Turn a node tree from `render.ts` into real elements. Rendering is
 * naive replace-everything; the trees here are small enough for that. */

import { VNode } from "./render.js";

export function build(node: VNode | string, doc: Document): Node {
  if (typeof node === "string") {
    return doc.createTextNode(node);
  }
  const element = doc.createElement(node.tag);
  for (const [name, value] of Object.entries(node.attrs ?? {})) {
    element.setAttribute(name, value);
  }
  for (const [event, handler] of Object.entries(node.on ?? {})) {
    element.addEventListener(event, handler);
  }
  for (const child of node.children ?? []) {
    element.appendChild(build(child, doc));
  }
  return element;
}

export function patch(container: Element, node: VNode): void {
  const doc = container.ownerDocument;
  container.replaceChildren(build(node, doc));
}
