import { chordKey, parseChordKey, type TriangulationData } from "./types.js";

/** "6;1-5,2-5,3-5" -- the CLI text encoding, URL-safe as-is. */
export function encodeTriangulation(t: TriangulationData): string {
  const parts = t.diagonals.map(([i, j]) => chordKey(i, j)).sort();
  return `${t.n};${parts.join(",")}`;
}

export function decodeTriangulation(text: string): TriangulationData {
  const [head, tail] = text.split(";");
  const n = Number(head);
  if (!Number.isInteger(n) || n < 4) throw new Error(`bad polygon size in ${text}`);
  const diagonals = (tail ?? "")
    .split(",")
    .filter((s) => s.trim().length > 0)
    .map((s) => parseChordKey(s.trim()));
  return { n, diagonals };
}

export function triangulationToQuery(t: TriangulationData): string {
  const params = new URLSearchParams();
  params.set("t", encodeTriangulation(t));
  return params.toString();
}

export function triangulationFromQuery(query: string): TriangulationData | null {
  const params = new URLSearchParams(query);
  const text = params.get("t");
  if (!text) return null;
  return decodeTriangulation(text);
}
