import type { MutateResponse } from "./types.js";

export interface OverlayCheck {
  partitioned: boolean;
  missing: string[];
  /** the unique cell marked as the flipped diagonal, with its delta */
  flippedCell: { chord: string; delta: number } | null;
  /** the unique cell marked as the incoming diagonal, with its delta */
  partnerCell: { chord: string; delta: number } | null;
  ok: boolean;
}

/**
 * The region overlay must assign exactly one tag to every displayed entry;
 * exactly one cell is the mutation position (delta -1) and exactly one the
 * incoming diagonal (delta +1).
 */
export function checkOverlay(payload: MutateResponse): OverlayCheck {
  const chords = Object.keys(payload.frieze_before.entries);
  const missing = chords.filter((key) => payload.regions[key] === undefined);
  const flipped = chords.filter((key) => payload.regions[key] === "PaShift");
  const partner = chords.filter((key) => payload.regions[key] === "Sa");
  const flippedCell =
    flipped.length === 1
      ? { chord: flipped[0]!, delta: payload.delta[flipped[0]!] ?? NaN }
      : null;
  const partnerCell =
    partner.length === 1
      ? { chord: partner[0]!, delta: payload.delta[partner[0]!] ?? NaN }
      : null;
  return {
    partitioned: missing.length === 0,
    missing,
    flippedCell,
    partnerCell,
    ok:
      missing.length === 0 &&
      flippedCell !== null &&
      flippedCell.delta === -1 &&
      partnerCell !== null &&
      partnerCell.delta === 1,
  };
}

/** Cells whose value changed, for the flip animation. */
export function changedCells(payload: MutateResponse): string[] {
  const before = payload.frieze_before.entries;
  const after = payload.frieze_after.entries;
  return Object.keys(before).filter((key) => before[key] !== after[key]);
}
