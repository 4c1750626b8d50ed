// Wire types, mirroring the server's JSON formats exactly.

/** One Laurent monomial: integer coefficient (as a decimal string, since
 *  values can exceed 2^53) and one exponent per variable. */
export interface LaurentTerm {
  coeff: string;
  exps: number[];
}

/** A Laurent polynomial is its sorted term list. */
export type LaurentJson = LaurentTerm[];

export interface QuiverJson {
  n: number;
  arrows: [number, number, number][];
}

export interface SeedJson {
  quiver: QuiverJson;
  vars: LaurentJson[];
}

export type Diagonal = [number, number];

export interface TriangulationJson {
  N: number;
  diagonals: Diagonal[];
}

/** Frieze over its fundamental domain: one [a, b, value] per cell. */
export interface FriezeJson {
  n: number;
  domain: [number, number, number][];
}

export interface ExchangeGraphJson {
  nodes: SeedJson[];
  edges: [number, number, number][];
  variables: LaurentJson[];
}

export interface SymbolicCell {
  a: number;
  b: number;
  poly: LaurentJson;
}

/** Render a Laurent polynomial as a monomial sum, e.g. "x1^-1*x2 + 2". */
export function formatLaurent(poly: LaurentJson): string {
  if (poly.length === 0) return "0";
  const pieces: string[] = [];
  for (const term of poly) {
    const factors = term.exps
      .map((e, i) => (e === 0 ? "" : e === 1 ? `x${i + 1}` : `x${i + 1}^${e}`))
      .filter((s) => s !== "");
    const negative = term.coeff.startsWith("-");
    const mag = negative ? term.coeff.slice(1) : term.coeff;
    let body: string;
    if (factors.length === 0) {
      body = mag;
    } else if (mag === "1") {
      body = factors.join("*");
    } else {
      body = `${mag}*${factors.join("*")}`;
    }
    if (pieces.length === 0) {
      pieces.push(negative ? `-${body}` : body);
    } else {
      pieces.push(negative ? `- ${body}` : `+ ${body}`);
    }
  }
  return pieces.join(" ");
}

function normalizeColumn(a: number, b: number, N: number): [number, number] {
  // shift both indices by a multiple of N so that 1 <= a <= N
  const shift = Math.floor((a - 1) / N) * N;
  return [a - shift, b - shift];
}

/**
 * Build a total lookup m(a, b) for the strip from the fundamental domain,
 * using row periodicity and the glide reflection m(a, b) = m(b, a + N).
 * Border rows (b = a, a + 1, a + n + 2, a + n + 3) are hardcoded.
 */
export function friezeLookup(f: FriezeJson): (a: number, b: number) => number {
  const N = f.n + 3;
  const cells = new Map<string, number>();
  for (const [a, b, v] of f.domain) cells.set(`${a},${b}`, v);
  return (a, b) => {
    const r = b - a - 1;
    if (r === -1 || r === f.n + 2) return 0;
    if (r === 0 || r === f.n + 1) return 1;
    if (r < -1 || r > f.n + 2) throw new Error(`cell (${a},${b}) off the strip`);
    let [aa, bb] = normalizeColumn(a, b, N);
    let v = cells.get(`${aa},${bb}`);
    if (v !== undefined) return v;
    [aa, bb] = normalizeColumn(bb, aa + N, N);
    v = cells.get(`${aa},${bb}`);
    if (v === undefined) throw new Error(`cell (${a},${b}) missing from domain`);
    return v;
  };
}
