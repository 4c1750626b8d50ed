import type {
  Diagonal,
  ExchangeGraphJson,
  FriezeJson,
  LaurentJson,
  QuiverJson,
  SeedJson,
  SymbolicCell,
  TriangulationJson,
} from "./types.js";

/** A 4xx from the service: code is machine-readable ("invalid_input",
 *  "budget_exceeded", "malformed", ...), detail is for humans. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
  ) {
    super(`${code}: ${detail}`);
    this.name = "ApiError";
  }
}

export type FetchFn = (input: string, init?: RequestInit) => Promise<Response>;

interface Envelope {
  ok: boolean;
  result?: unknown;
  error?: { error?: string; detail?: string };
}

/** Thin typed client for the JSON service. Stateless, like the service. */
export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchFn = (input, init) => fetch(input, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = (await response.json()) as Envelope;
    if (!response.ok || !payload.ok) {
      const err = payload.error ?? {};
      throw new ApiError(
        response.status,
        err.error ?? "unknown",
        err.detail ?? "request failed",
      );
    }
    return payload.result as T;
  }

  async health(): Promise<{ ok: boolean }> {
    const response = await this.fetchFn(this.baseUrl + "/api/health");
    return (await response.json()) as { ok: boolean };
  }

  async mutateQuiver(quiver: QuiverJson, k: number): Promise<QuiverJson> {
    const r = await this.post<{ quiver: QuiverJson }>("/api/quiver/mutate", {
      quiver,
      k,
    });
    return r.quiver;
  }

  async mutateSeed(seed: SeedJson, k: number): Promise<SeedJson> {
    const r = await this.post<{ seed: SeedJson }>("/api/seed/mutate", { seed, k });
    return r.seed;
  }

  async enumerateExchange(
    quiver: QuiverJson,
    budget: number,
  ): Promise<ExchangeGraphJson> {
    const r = await this.post<{ graph: ExchangeGraphJson }>(
      "/api/exchange/enumerate",
      { quiver, budget },
    );
    return r.graph;
  }

  async flip(
    triangulation: TriangulationJson,
    diagonal: Diagonal,
  ): Promise<TriangulationJson> {
    const r = await this.post<{ triangulation: TriangulationJson }>(
      "/api/polygon/flip",
      { triangulation, diagonal },
    );
    return r.triangulation;
  }

  async friezeFromTriangulation(
    triangulation: TriangulationJson,
  ): Promise<FriezeJson> {
    const r = await this.post<{ frieze: FriezeJson }>(
      "/api/frieze/from-triangulation",
      { triangulation },
    );
    return r.frieze;
  }

  async symbolic(bolt: { cells: Diagonal[] }): Promise<SymbolicCell[]> {
    const r = await this.post<{ cells: SymbolicCell[] }>("/api/frieze/symbolic", {
      bolt,
    });
    return r.cells;
  }

  async phi(bolt: { cells: Diagonal[] }, diagonal: Diagonal): Promise<LaurentJson> {
    const r = await this.post<{ poly: LaurentJson }>("/api/category/phi", {
      bolt,
      diagonal,
    });
    return r.poly;
  }
}
