import { distanceToSegment, vertexPoint, type Point } from "./geometry.js";
import { chordKey, parseChordKey, type FriezePayload, type TriangulationData } from "./types.js";

export interface PolygonRenderOptions {
  size?: number;
  selected?: string | null;
  /** flip partner of the hovered diagonal, drawn dashed */
  preview?: { at: string; partner: string } | null;
}

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderPolygonSvg(
  t: TriangulationData,
  opts: PolygonRenderOptions = {},
): string {
  const size = opts.size ?? 420;
  const c = size / 2;
  const r = c - 30;
  const pts = new Map<number, Point>();
  for (let v = 1; v <= t.n; v++) pts.set(v, vertexPoint(v, t.n, c, c, r));

  const boundary = Array.from({ length: t.n }, (_, k) => {
    const p = pts.get(k + 1)!;
    return `${p.x.toFixed(1)},${p.y.toFixed(1)}`;
  }).join(" ");

  const lines: string[] = [];
  for (const [i, j] of t.diagonals) {
    const key = chordKey(i, j);
    const a = pts.get(i)!;
    const b = pts.get(j)!;
    const classes = ["diagonal"];
    if (key === opts.selected) classes.push("selected");
    lines.push(
      `<line class="${classes.join(" ")}" data-diagonal="${key}" ` +
        `x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" ` +
        `x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}"></line>`,
    );
  }
  if (opts.preview) {
    const [i, j] = parseChordKey(opts.preview.partner);
    const a = pts.get(i)!;
    const b = pts.get(j)!;
    lines.push(
      `<line class="preview" data-preview="${opts.preview.partner}" ` +
        `x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" ` +
        `x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}"></line>`,
    );
  }

  const labels = Array.from(pts.entries(), ([v, p]) => {
    const out = vertexPoint(v, t.n, c, c, r + 16);
    return `<text class="vertex-label" x="${out.x.toFixed(1)}" y="${out.y.toFixed(1)}">${v}</text>`;
  });

  return (
    `<svg xmlns="${SVG_NS}" viewBox="0 0 ${size} ${size}" class="polygon">` +
    `<polygon class="boundary" points="${boundary}"></polygon>` +
    lines.join("") +
    labels.join("") +
    `</svg>`
  );
}

/** Diagonal of the triangulation nearest to a click, within tolerance. */
export function hitTestDiagonal(
  t: TriangulationData,
  point: Point,
  size = 420,
  tolerance = 12,
): string | null {
  const c = size / 2;
  const r = c - 30;
  let best: string | null = null;
  let bestDist = tolerance;
  for (const [i, j] of t.diagonals) {
    const d = distanceToSegment(
      point,
      vertexPoint(i, t.n, c, c, r),
      vertexPoint(j, t.n, c, c, r),
    );
    if (d < bestDist) {
      bestDist = d;
      best = chordKey(i, j);
    }
  }
  return best;
}

export interface FriezeRenderOptions {
  /** extra columns beyond one fundamental period */
  margin?: number;
  units?: string[];
  regions?: Record<string, string> | null;
  delta?: Record<string, number> | null;
  /** entries longer than this many digits render abbreviated */
  abbreviateAfter?: number;
}

export function friezeValueAt(f: FriezePayload, i: number, j: number): string {
  const n = f.n;
  const d = ((j - i) % n + n) % n;
  if (d === 0) return "0";
  if (d === 1 || d === n - 1) return "1";
  const a = ((i - 1) % n + n) % n + 1;
  const b = ((j - 1) % n + n) % n + 1;
  const value = f.entries[chordKey(a, b)];
  if (value === undefined) throw new Error(`missing entry ${chordKey(a, b)}`);
  return value;
}

export function abbreviate(value: string, limit = 6): string {
  if (value.length <= limit) return value;
  return `${value.slice(0, 3)}…${value.slice(-2)}`;
}

/** Staggered frieze grid as HTML; every cell carries its chord key. */
export function renderFriezeHtml(
  f: FriezePayload,
  opts: FriezeRenderOptions = {},
): string {
  const margin = opts.margin ?? 2;
  const limit = opts.abbreviateAfter ?? 6;
  const units = new Set(opts.units ?? []);
  const rows: string[] = [];
  for (let d = 0; d <= f.n; d++) {
    const cells: string[] = [];
    for (let i = 1; i <= f.n + margin; i++) {
      const j = i + d;
      const value = friezeValueAt(f, i, j);
      const classes = ["cell"];
      const attrs: string[] = [];
      let badge = "";
      if (d >= 2 && d <= f.n - 2) {
        const a = ((i - 1) % f.n) + 1;
        const b = ((j - 1) % f.n) + 1;
        const key = chordKey(a, b);
        attrs.push(`data-chord="${key}"`);
        if (units.has(key)) classes.push("unit");
        if (opts.regions) {
          const tag = opts.regions[key];
          if (tag === undefined) throw new Error(`region overlay misses ${key}`);
          classes.push(`region-${tag}`);
          attrs.push(`data-region="${tag}"`);
        }
        if (opts.delta) {
          const dv = opts.delta[key];
          if (dv === undefined) throw new Error(`delta overlay misses ${key}`);
          attrs.push(`data-delta="${dv}"`);
          if (dv !== 0) {
            badge = `<sub class="delta">${dv > 0 ? "+" : ""}${dv}</sub>`;
          }
        }
      } else {
        classes.push("trivial");
      }
      const shown = abbreviate(value, limit);
      if (shown !== value) attrs.push(`title="${value}"`);
      const attrText = attrs.length ? " " + attrs.join(" ") : "";
      cells.push(
        `<span class="${classes.join(" ")}"${attrText}>${shown}${badge}</span>`,
      );
    }
    rows.push(`<div class="frieze-row offset-${d % 2}">${cells.join("")}</div>`);
  }
  return `<div class="frieze">${rows.join("")}</div>`;
}
