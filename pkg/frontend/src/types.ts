export interface TriangulationData {
  n: number;
  diagonals: [number, number][];
}

export interface FriezePayload {
  n: number;
  /** entry values as decimal strings, keyed by "i-j" with i < j */
  entries: Record<string, string>;
}

export interface FriezeResponse {
  frieze: FriezePayload;
  quiddity: number[];
  unit_positions: string[];
}

export interface FlipResponse {
  triangulation: TriangulationData;
  new_diagonal: string;
}

export interface MutateResponse {
  frieze_before: FriezePayload;
  frieze_after: FriezePayload;
  delta: Record<string, number>;
  regions: Record<string, string>;
  flip: {
    at: string;
    new_diagonal: string;
    triangulation: TriangulationData;
  };
}

export interface FlipMove {
  at: string;
  newDiagonal: string;
}

export function chordKey(i: number, j: number): string {
  return i < j ? `${i}-${j}` : `${j}-${i}`;
}

export function parseChordKey(key: string): [number, number] {
  const parts = key.split("-").map(Number);
  if (parts.length !== 2 || parts.some((v) => !Number.isInteger(v))) {
    throw new Error(`bad chord key: ${key}`);
  }
  return [parts[0]!, parts[1]!];
}

export function sortedDiagonals(t: TriangulationData): string[] {
  return t.diagonals
    .map(([i, j]) => (i < j ? [i, j] : [j, i]) as [number, number])
    .sort((p, q) => p[0] - q[0] || p[1] - q[1])
    .map(([i, j]) => `${i}-${j}`);
}

export function sameTriangulation(a: TriangulationData, b: TriangulationData): boolean {
  return a.n === b.n && sortedDiagonals(a).join(",") === sortedDiagonals(b).join(",");
}
