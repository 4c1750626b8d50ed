import { clearNode, createSvgNode } from "./svg.js";
import { formatLaurent, friezeLookup } from "./types.js";
import type { Diagonal, FriezeJson, QuiverJson, SeedJson } from "./types.js";

// Layout constants. Everything is deterministic: same state, same DOM.
const QUIVER_STEP = 90;
const QUIVER_R = 18;
const POLY_CX = 150;
const POLY_CY = 150;
const POLY_R = 120;

function polygonPoint(i: number, N: number): [number, number] {
  // vertex 1 at the top, numbering clockwise
  const angle = -Math.PI / 2 + ((i - 1) * 2 * Math.PI) / N;
  return [POLY_CX + POLY_R * Math.cos(angle), POLY_CY + POLY_R * Math.sin(angle)];
}

/** Vertices on a line, arrows arcing above or below by span. */
export function renderQuiver(
  svg: SVGSVGElement,
  quiver: QuiverJson,
  onVertex: (k: number) => void,
): void {
  clearNode(svg);
  const width = 60 + QUIVER_STEP * quiver.n;
  svg.setAttribute("viewBox", `0 0 ${width} 160`);
  const defs = createSvgNode(svg, "defs");
  const marker = createSvgNode(defs, "marker", {
    id: "arrowhead",
    viewBox: "0 0 10 10",
    refX: 9,
    refY: 5,
    markerWidth: 7,
    markerHeight: 7,
    orient: "auto-start-reverse",
  });
  createSvgNode(marker, "path", { d: "M 0 1 L 9 5 L 0 9 z", fill: "#445" });

  const cx = (k: number) => 60 + QUIVER_STEP * (k - 1);
  const cy = 80;
  for (const [i, j, mult] of quiver.arrows) {
    const x1 = cx(i);
    const x2 = cx(j);
    const dir = Math.sign(x2 - x1);
    const startX = x1 + dir * QUIVER_R;
    const endX = x2 - dir * QUIVER_R;
    const span = Math.abs(i - j);
    // adjacent arrows run straight; longer ones arc above the row
    const lift = span === 1 ? 0 : 22 + 14 * span;
    const midX = (startX + endX) / 2;
    const path = createSvgNode(svg, "path", {
      d: `M ${startX} ${cy} Q ${midX} ${cy - lift} ${endX} ${cy}`,
      class: "arrow",
      fill: "none",
      stroke: "#445",
      "stroke-width": 1.6,
      "marker-end": "url(#arrowhead)",
      "data-arrow": `${i},${j}`,
    });
    void path;
    if (mult > 1) {
      const label = createSvgNode(svg, "text", {
        x: midX,
        y: cy - lift / 2 - 6,
        class: "arrow-mult",
        "text-anchor": "middle",
      });
      label.textContent = `${mult}`;
    }
  }
  for (let k = 1; k <= quiver.n; k++) {
    const group = createSvgNode(svg, "g", {
      class: "vertex",
      "data-vertex": k,
      cursor: "pointer",
    });
    createSvgNode(group, "circle", {
      cx: cx(k),
      cy,
      r: QUIVER_R,
      fill: "#eef2ff",
      stroke: "#445",
      "stroke-width": 1.5,
    });
    const label = createSvgNode(group, "text", {
      x: cx(k),
      y: cy + 5,
      "text-anchor": "middle",
      class: "vertex-label",
    });
    label.textContent = `${k}`;
    group.addEventListener("click", () => onVertex(k));
  }
}

/** Circular polygon; diagonals are clickable, sides only hint. */
export function renderPolygon(
  svg: SVGSVGElement,
  N: number,
  diagonals: Diagonal[],
  onDiagonal: (d: Diagonal) => void,
  onSide: () => void,
): void {
  clearNode(svg);
  svg.setAttribute("viewBox", "0 0 300 300");
  for (let i = 1; i <= N; i++) {
    const j = (i % N) + 1;
    const [x1, y1] = polygonPoint(i, N);
    const [x2, y2] = polygonPoint(j, N);
    const side = createSvgNode(svg, "line", {
      x1,
      y1,
      x2,
      y2,
      class: "side",
      stroke: "#9aa3b2",
      "stroke-width": 2,
      "data-side": `${i},${j}`,
    });
    side.addEventListener("click", onSide);
  }
  for (const d of diagonals) {
    const [a, b] = d;
    const [x1, y1] = polygonPoint(a, N);
    const [x2, y2] = polygonPoint(b, N);
    const line = createSvgNode(svg, "line", {
      x1,
      y1,
      x2,
      y2,
      class: "diagonal",
      stroke: "#2563eb",
      "stroke-width": 3,
      cursor: "pointer",
      "data-diagonal": `${a},${b}`,
    });
    line.addEventListener("click", () => onDiagonal(d));
  }
  for (let i = 1; i <= N; i++) {
    const [x, y] = polygonPoint(i, N);
    createSvgNode(svg, "circle", { cx: x, cy: y, r: 4, fill: "#445" });
    const label = createSvgNode(svg, "text", {
      x: POLY_CX + (x - POLY_CX) * 1.12,
      y: POLY_CY + (y - POLY_CY) * 1.12 + 4,
      "text-anchor": "middle",
      class: "polygon-label",
    });
    label.textContent = `${i}`;
  }
}

const cellKey = (a: number, b: number, N: number): string => {
  const u = ((a - 1) % N) + 1;
  const v = ((b - 1) % N) + 1;
  return u < v ? `${u},${v}` : `${v},${u}`;
};

/**
 * One column per strip position, border rows of 1s included. Cells whose
 * diagonal is a summand of the current tilting object (value 1 there) are
 * marked, as are the cells carrying the largest entry.
 */
export function renderFrieze(
  container: HTMLElement,
  frieze: FriezeJson,
  diagonals: Diagonal[],
): void {
  clearNode(container);
  const N = frieze.n + 3;
  const m = friezeLookup(frieze);
  const summands = new Set(diagonals.map(([a, b]) => cellKey(a, b, N)));
  let max = 0;
  for (const [, , v] of frieze.domain) max = Math.max(max, v);
  for (let r = 0; r <= frieze.n + 1; r++) {
    const row = document.createElement("div");
    row.className = "frieze-row";
    row.style.paddingLeft = `${r * 1.1}em`;
    for (let a = 1; a <= N; a++) {
      const b = a + r + 1;
      const value = m(a, b);
      const cell = document.createElement("span");
      cell.className = "cell";
      cell.dataset.cell = `${a},${b}`;
      cell.textContent = `${value}`;
      if (r >= 1 && r <= frieze.n) {
        if (summands.has(cellKey(a, b, N))) cell.classList.add("summand");
        if (value === max) cell.classList.add("max");
      }
      row.appendChild(cell);
    }
    container.appendChild(row);
  }
}

export function renderVariables(list: HTMLElement, seed: SeedJson): void {
  clearNode(list);
  seed.vars.forEach((poly, i) => {
    const item = document.createElement("li");
    item.dataset.var = `${i + 1}`;
    item.textContent = formatLaurent(poly);
    list.appendChild(item);
  });
}
