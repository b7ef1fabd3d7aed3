export interface Point {
  x: number;
  y: number;
}

/**
 * Position of vertex v (1-based) on a circle, labels running clockwise
 * from the top.  SVG y grows downward, so the screen coordinate flips.
 */
export function vertexPoint(
  v: number,
  n: number,
  cx: number,
  cy: number,
  r: number,
): Point {
  const angle = Math.PI / 2 - (2 * Math.PI * (v - 1)) / n;
  return { x: cx + r * Math.cos(angle), y: cy - r * Math.sin(angle) };
}

/** Squared distance from a point to the segment ab. */
export function distanceToSegment(p: Point, a: Point, b: Point): number {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len2 = dx * dx + dy * dy;
  let t = len2 === 0 ? 0 : ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  t = Math.max(0, Math.min(1, t));
  const qx = a.x + t * dx;
  const qy = a.y + t * dy;
  return Math.hypot(p.x - qx, p.y - qy);
}
