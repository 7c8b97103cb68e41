import { Api } from "./api.js";
import { patch } from "./dom.js";
import { Actions, render } from "./render.js";
import { Store } from "./state.js";

function boot(): void {
  const view = document.getElementById("view");
  const source = document.getElementById("source") as HTMLTextAreaElement | null;
  const loadButton = document.getElementById("load");
  if (!view || !source || !loadButton) {
    throw new Error("index.html is missing the loader skeleton");
  }

  const store = new Store(new Api(""));
  const actions: Actions = {
    toggle: (feature) => void store.toggle(feature),
    undo: () => void store.undo(),
    reset: () => void store.reset(),
    setLimit: (limit) => store.setLimit(limit),
    fetchCompletions: () => void store.fetchCompletions(),
  };

  loadButton.addEventListener("click", () => void store.load(source.value));
  store.subscribe((state) => patch(view, render(state, actions)));
}

boot();
