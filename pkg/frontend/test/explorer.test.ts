import { beforeAll, describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { checkOverlay, changedCells } from "../src/overlay.js";
import { ExplorerState } from "../src/state.js";
import { chordKey, sortedDiagonals, type TriangulationData } from "../src/types.js";
import { API_BASE } from "./config.js";

const api = new ApiClient(API_BASE);

const HEX: TriangulationData = {
  n: 6,
  diagonals: [
    [1, 5],
    [2, 5],
    [3, 5],
  ],
};

/** Small deterministic LCG so the 13-gon走 sequence is reproducible. */
function makeRng(seed: number): () => number {
  let s = seed >>> 0;
  return () => {
    s = (s * 1664525 + 1013904223) >>> 0;
    return s / 2 ** 32;
  };
}

function randomTriangulation(n: number, rng: () => number): TriangulationData {
  const diagonals: [number, number][] = [];
  const split = (verts: number[]): void => {
    if (verts.length < 3) return;
    const k = 1 + Math.floor(rng() * (verts.length - 2));
    const apex = verts[k]!;
    const first = verts[0]!;
    const last = verts[verts.length - 1]!;
    for (const [u, v] of [
      [first, apex],
      [apex, last],
    ] as const) {
      const span = Math.min(Math.abs(u - v), n - Math.abs(u - v));
      if (span >= 2) diagonals.push(u < v ? [u, v] : [v, u]);
    }
    split(verts.slice(0, k + 1));
    split(verts.slice(k));
  };
  split(Array.from({ length: n }, (_, i) => i + 1));
  return { n, diagonals };
}

async function expectDisplayedFriezeIsServerFrieze(state: ExplorerState) {
  const fresh = await api.frieze(state.current);
  expect(state.frieze).toEqual(fresh.frieze);
  expect(state.unitPositions).toEqual(fresh.unit_positions);
}

beforeAll(async () => {
  const health = await api.health();
  expect(health.status).toBe("ok");
});

describe("scripted flips on the hexagon", () => {
  it("keeps the displayed frieze equal to the API frieze after every flip", async () => {
    const state = new ExplorerState(api, HEX);
    await state.load();
    await expectDisplayedFriezeIsServerFrieze(state);

    const script = ["2-5", "1-3", "3-5"];
    for (const at of script) {
      const before = state.frieze;
      const res = await state.flip(at);
      expect(res.flip.at).toBe(at);
      expect(state.frieze).toEqual(res.frieze_after);
      await expectDisplayedFriezeIsServerFrieze(state);
      expect(changedCells(res).length).toBeGreaterThan(0);
      expect(before).not.toEqual(state.frieze);
    }
    expect(state.history.length).toBe(3);
    const replayed = await state.replayHistory();
    expect(sortedDiagonals(replayed)).toEqual(sortedDiagonals(state.current));
  });

  it("undo restores the previous frieze exactly, redo repeats it", async () => {
    const state = new ExplorerState(api, HEX);
    await state.load();
    const friezeBefore = state.frieze;
    const triBefore = sortedDiagonals(state.current);

    await state.flip("2-5");
    const friezeAfter = state.frieze;
    expect(await state.undo()).toBe(true);
    expect(sortedDiagonals(state.current)).toEqual(triBefore);
    expect(state.frieze).toEqual(friezeBefore);
    await expectDisplayedFriezeIsServerFrieze(state);

    expect(await state.redo()).toBe(true);
    expect(state.frieze).toEqual(friezeAfter);
    await expectDisplayedFriezeIsServerFrieze(state);

    expect(await state.redo()).toBe(false);
    await state.undo();
    expect(await state.undo()).toBe(false);
  });

  it("rejects overlapping flips while one is in flight", async () => {
    const state = new ExplorerState(api, HEX);
    await state.load();
    const first = state.flip("2-5");
    await expect(state.flip("1-5")).rejects.toThrow(/in flight/);
    await first;
    await expectDisplayedFriezeIsServerFrieze(state);
  });

  it("surfaces API validation errors", async () => {
    const state = new ExplorerState(api, HEX);
    await state.load();
    await expect(state.flip("1-3")).rejects.toThrowError(ApiError);
    // a failed flip leaves no history and keeps the state usable
    expect(state.history.length).toBe(0);
    expect(state.busy).toBe(false);
    await expectDisplayedFriezeIsServerFrieze(state);
  });
});

describe("region overlay", () => {
  it("partitions entries with one flipped cell and one partner cell", async () => {
    const state = new ExplorerState(api, HEX);
    await state.load();
    const res = await state.flip("2-5");
    const check = checkOverlay(res);
    expect(check.partitioned).toBe(true);
    expect(check.flippedCell).toEqual({ chord: "2-5", delta: -1 });
    expect(check.partnerCell).toEqual({ chord: "1-3", delta: 1 });
    expect(check.ok).toBe(true);
  });
});

describe("random 13-gon walk", () => {
  it("stays consistent with the server over a seeded flip sequence", async () => {
    const rng = makeRng(20260809);
    const t13 = randomTriangulation(13, rng);
    const state = new ExplorerState(api, t13);
    await state.load();
    await expectDisplayedFriezeIsServerFrieze(state);

    for (let step = 0; step < 6; step++) {
      const choices = sortedDiagonals(state.current);
      const at = choices[Math.floor(rng() * choices.length)]!;
      const res = await state.flip(at);
      expect(checkOverlay(res).ok).toBe(true);
      await expectDisplayedFriezeIsServerFrieze(state);
    }
    expect(state.history.length).toBe(6);
    const replayed = await state.replayHistory();
    expect(sortedDiagonals(replayed)).toEqual(sortedDiagonals(state.current));

    // unwind everything; we must be back at the start
    while (await state.undo()) {
      await expectDisplayedFriezeIsServerFrieze(state);
    }
    expect(sortedDiagonals(state.current)).toEqual(sortedDiagonals(t13));
  });
});
