import { ApiClient, ApiError } from "./api.js";
import { UndoStack } from "./history.js";
import type {
  Diagonal,
  FriezeJson,
  SeedJson,
  TriangulationJson,
} from "./types.js";

/**
 * The one state all three panels render. The k-th cluster variable of the
 * seed and the k-th entry of `diagonals` always describe the same object:
 * mutating the seed at k and flipping diagonal k are the same move, so
 * both panels dispatch the identical action and can never drift apart.
 */
export interface ExplorerState {
  n: number;
  seed: SeedJson;
  /** diagonals[k-1] corresponds to seed variable k */
  diagonals: Diagonal[];
  frieze: FriezeJson;
  /** summary of the last exchange enumeration, if any */
  graph: { seeds: number; edges: number } | null;
  toast: string | null;
}

export type ExplorerAction =
  | { kind: "exchange"; k: number }
  | { kind: "enumerate"; budget: number }
  | { kind: "undo" }
  | { kind: "reset"; n: number }
  | { kind: "hint"; message: string };

function initialSeed(n: number): SeedJson {
  const arrows: [number, number, number][] = [];
  for (let i = 1; i < n; i++) arrows.push([i, i + 1, 1]);
  const vars = Array.from({ length: n }, (_, i) => [
    { coeff: "1", exps: Array.from({ length: n }, (_, j) => (i === j ? 1 : 0)) },
  ]);
  return { quiver: { n, arrows }, vars };
}

function fanDiagonals(n: number): Diagonal[] {
  // diagonal (1, k + 2) carries variable x_k in the starting seed
  return Array.from({ length: n }, (_, i) => [1, i + 3] as Diagonal);
}

const key = (d: Diagonal) => `${d[0]},${d[1]}`;

export class ExplorerStore {
  private state: ExplorerState | null = null;
  private listeners: (() => void)[] = [];
  private history = new UndoStack<ExplorerState>();
  /** id of the newest dispatched action; responses from older ones are stale */
  private seq = 0;
  private pending: Promise<void>[] = [];
  private inflight = 0;

  constructor(private readonly client: ApiClient) {}

  /** True while any action is awaiting the server; the UI blocks clicks
   *  so each panel has at most one request in flight. */
  get busy(): boolean {
    return this.inflight > 0;
  }

  get current(): ExplorerState {
    if (!this.state) throw new Error("store not initialized; dispatch reset first");
    return this.state;
  }

  get undoDepth(): number {
    return this.history.depth;
  }

  get historyLabels(): string[] {
    return this.history.labels();
  }

  subscribe(listener: () => void): void {
    this.listeners.push(listener);
  }

  /** Resolves when every action dispatched so far has settled. */
  async idle(): Promise<void> {
    while (this.pending.length > 0) {
      const batch = this.pending;
      this.pending = [];
      await Promise.all(batch);
    }
  }

  dispatch(action: ExplorerAction): Promise<void> {
    this.inflight += 1;
    const task = this.run(action).finally(() => {
      this.inflight -= 1;
      if (this.inflight === 0) this.notify();
    });
    this.pending.push(task);
    return task;
  }

  private notify(): void {
    for (const fn of this.listeners) fn();
  }

  private commit(ticket: number, action: string, next: ExplorerState): boolean {
    if (ticket !== this.seq) return false; // a newer action superseded this one
    if (this.state && action !== "undo" && action !== "reset") {
      this.history.push(action, this.state);
    }
    this.state = next;
    this.notify();
    return true;
  }

  private async run(action: ExplorerAction): Promise<void> {
    switch (action.kind) {
      case "hint": {
        // pure UI feedback, no request and no history entry
        if (this.state) {
          this.state = { ...this.state, toast: action.message };
          this.notify();
        }
        return;
      }
      case "reset":
        return this.doReset(action.n);
      case "undo": {
        const ticket = ++this.seq;
        const top = this.history.pop();
        if (top) this.commit(ticket, "undo", top.state);
        return;
      }
      case "exchange":
        return this.doExchange(action.k);
      case "enumerate":
        return this.doEnumerate(action.budget);
    }
  }

  private toast(message: string): void {
    if (this.state) {
      this.state = { ...this.state, toast: message };
      this.notify();
    }
  }

  private async doReset(n: number): Promise<void> {
    const ticket = ++this.seq;
    const seed = initialSeed(n);
    const diagonals = fanDiagonals(n);
    try {
      const frieze = await this.client.friezeFromTriangulation({
        N: n + 3,
        diagonals,
      });
      this.history.clear();
      this.commit(ticket, "reset", {
        n,
        seed,
        diagonals,
        frieze,
        graph: null,
        toast: null,
      });
    } catch (err) {
      if (!(err instanceof ApiError)) throw err;
      this.toast(err.message);
    }
  }

  /** Mutate the seed at k and flip the matching diagonal, then rebuild
   *  the frieze; one action, three requests, one history entry. */
  private async doExchange(k: number): Promise<void> {
    const state = this.current;
    if (k < 1 || k > state.n) {
      this.toast(`no vertex ${k} here`);
      return;
    }
    const ticket = ++this.seq;
    const triangulation: TriangulationJson = {
      N: state.n + 3,
      diagonals: state.diagonals,
    };
    try {
      const seed = await this.client.mutateSeed(state.seed, k);
      const flipped = await this.client.flip(triangulation, state.diagonals[k - 1]!);
      const before = new Set(state.diagonals.map(key));
      const replacement = flipped.diagonals.find((d) => !before.has(key(d)));
      if (!replacement) throw new Error("flip returned the same triangulation");
      const diagonals = state.diagonals.map((d, i) =>
        i === k - 1 ? replacement : d,
      );
      const frieze = await this.client.friezeFromTriangulation({
        N: state.n + 3,
        diagonals,
      });
      this.commit(ticket, `mutate ${k}`, {
        ...state,
        seed,
        diagonals,
        frieze,
        toast: null,
      });
    } catch (err) {
      if (!(err instanceof ApiError)) throw err;
      this.toast(err.message);
    }
  }

  private async doEnumerate(budget: number): Promise<void> {
    const state = this.current;
    const ticket = ++this.seq;
    try {
      const graph = await this.client.enumerateExchange(state.seed.quiver, budget);
      this.commit(ticket, `enumerate ${budget}`, {
        ...state,
        graph: { seeds: graph.nodes.length, edges: graph.edges.length / 2 },
        toast: `exchange graph: ${graph.nodes.length} seeds`,
      });
    } catch (err) {
      if (!(err instanceof ApiError)) throw err;
      // budget overruns are an expected outcome, not a crash
      this.toast(err.message);
    }
  }
}
