import { ApiClient } from "./api.js";
import { ExplorerStore } from "./store.js";
import { renderFrieze, renderPolygon, renderQuiver, renderVariables } from "./render.js";

export interface App {
  store: ExplorerStore;
  root: HTMLElement;
  /** settles when all dispatched actions have been applied or discarded */
  idle(): Promise<void>;
}

const SHELL = `
  <div class="toolbar">
    <label>rank
      <select class="rank-select">
        ${[1, 2, 3, 4, 5, 6].map((n) => `<option value="${n}">${n}</option>`).join("")}
      </select>
    </label>
    <button class="reset-button">reset</button>
    <button class="undo-button">undo</button>
    <label>budget <input class="budget-input" type="number" value="100" min="1"></label>
    <button class="enumerate-button">enumerate</button>
    <span class="graph-summary"></span>
  </div>
  <div class="toast" role="status"></div>
  <div class="panels">
    <section class="panel quiver-panel">
      <h2>quiver</h2>
      <svg class="quiver-svg"></svg>
      <ol class="vars"></ol>
    </section>
    <section class="panel polygon-panel">
      <h2>triangulation</h2>
      <svg class="polygon-svg"></svg>
    </section>
    <section class="panel frieze-panel">
      <h2>frieze</h2>
      <div class="frieze-grid"></div>
    </section>
  </div>
`;

function find<T extends Element>(root: HTMLElement, selector: string): T {
  const node = root.querySelector(selector);
  if (!node) throw new Error(`missing ${selector}`);
  return node as T;
}

/** Mount the explorer into `root` and load the rank-`n` starting state. */
export async function boot(
  root: HTMLElement,
  client: ApiClient,
  n = 3,
): Promise<App> {
  root.innerHTML = SHELL;
  const store = new ExplorerStore(client);

  const quiverSvg = find<SVGSVGElement>(root, ".quiver-svg");
  const polygonSvg = find<SVGSVGElement>(root, ".polygon-svg");
  const friezeGrid = find<HTMLElement>(root, ".frieze-grid");
  const varsList = find<HTMLElement>(root, ".vars");
  const toast = find<HTMLElement>(root, ".toast");
  const summary = find<HTMLElement>(root, ".graph-summary");
  const undoButton = find<HTMLButtonElement>(root, ".undo-button");
  const rankSelect = find<HTMLSelectElement>(root, ".rank-select");
  rankSelect.value = `${n}`;

  // Clicks dispatch and return; rendering happens on store notifications.
  // While a request is in flight the panels are inert, so each panel has
  // at most one outstanding request and no click can interleave.
  const act = (action: Parameters<ExplorerStore["dispatch"]>[0]) => {
    if (store.busy && action.kind !== "hint") return;
    void store.dispatch(action);
  };

  store.subscribe(() => {
    const state = store.current;
    root.classList.toggle("busy", store.busy);
    renderQuiver(quiverSvg, state.seed.quiver, (k) => act({ kind: "exchange", k }));
    renderPolygon(
      polygonSvg,
      state.n + 3,
      state.diagonals,
      (d) => {
        const k = state.diagonals.findIndex((x) => x[0] === d[0] && x[1] === d[1]);
        act({ kind: "exchange", k: k + 1 });
      },
      () => act({ kind: "hint", message: "that is a side; only diagonals flip" }),
    );
    renderFrieze(friezeGrid, state.frieze, state.diagonals);
    renderVariables(varsList, state.seed);
    toast.textContent = state.toast ?? "";
    summary.textContent = state.graph
      ? `exchange graph: ${state.graph.seeds} seeds, ${state.graph.edges} edges`
      : "";
    undoButton.disabled = store.undoDepth === 0;
  });

  undoButton.addEventListener("click", () => act({ kind: "undo" }));
  find<HTMLButtonElement>(root, ".reset-button").addEventListener("click", () =>
    act({ kind: "reset", n: Number(rankSelect.value) }),
  );
  find<HTMLButtonElement>(root, ".enumerate-button").addEventListener("click", () => {
    const budget = Number(find<HTMLInputElement>(root, ".budget-input").value);
    act({ kind: "enumerate", budget });
  });

  await store.dispatch({ kind: "reset", n });
  return { store, root, idle: () => store.idle() };
}

declare global {
  interface Window {
    CF_API_BASE?: string;
  }
}

// Auto-mount outside the test harness.
const mount = typeof document !== "undefined" ? document.getElementById("app") : null;
if (mount) {
  const base = window.CF_API_BASE ?? "http://127.0.0.1:8780";
  void boot(mount, new ApiClient(base));
}
