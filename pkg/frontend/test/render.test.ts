import { describe, expect, it } from "vitest";

import {
  abbreviate,
  friezeValueAt,
  hitTestDiagonal,
  renderFriezeHtml,
  renderPolygonSvg,
} from "../src/render.js";
import { vertexPoint } from "../src/geometry.js";
import type { FriezePayload, TriangulationData } from "../src/types.js";

const HEX: TriangulationData = {
  n: 6,
  diagonals: [
    [1, 5],
    [2, 5],
    [3, 5],
  ],
};

const HEX_FRIEZE: FriezePayload = {
  n: 6,
  entries: {
    "1-3": "2", "1-4": "3", "1-5": "1", "2-4": "2", "2-5": "1",
    "2-6": "2", "3-5": "1", "3-6": "3", "4-6": "4",
  },
};

describe("polygon rendering", () => {
  it("draws every diagonal as a clickable element", () => {
    const svg = renderPolygonSvg(HEX);
    expect(svg.match(/data-diagonal=/g)).toHaveLength(3);
    expect(svg).toContain('data-diagonal="2-5"');
    for (let v = 1; v <= 6; v++) {
      expect(svg).toContain(`>${v}</text>`);
    }
  });

  it("marks the selection and the preview partner", () => {
    const svg = renderPolygonSvg(HEX, {
      selected: "2-5",
      preview: { at: "2-5", partner: "1-3" },
    });
    expect(svg).toContain('class="diagonal selected" data-diagonal="2-5"');
    expect(svg).toContain('data-preview="1-3"');
  });

  it("hit-tests clicks back to diagonals", () => {
    const mid = (i: number, j: number) => {
      const a = vertexPoint(i, 6, 210, 210, 180);
      const b = vertexPoint(j, 6, 210, 210, 180);
      return { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 };
    };
    expect(hitTestDiagonal(HEX, mid(2, 5))).toBe("2-5");
    expect(hitTestDiagonal(HEX, mid(3, 5))).toBe("3-5");
    expect(hitTestDiagonal(HEX, { x: 5, y: 5 })).toBeNull();
  });
});

describe("frieze rendering", () => {
  it("reads entries with glide periodicity and trivial rows", () => {
    expect(friezeValueAt(HEX_FRIEZE, 1, 1)).toBe("0");
    expect(friezeValueAt(HEX_FRIEZE, 1, 2)).toBe("1");
    expect(friezeValueAt(HEX_FRIEZE, 4, 6)).toBe("4");
    expect(friezeValueAt(HEX_FRIEZE, 6, 10)).toBe("4"); // wraps to 4-6
    expect(friezeValueAt(HEX_FRIEZE, 1, 6)).toBe("1"); // distance n-1
  });

  it("renders one period plus margin with unit highlights", () => {
    const html = renderFriezeHtml(HEX_FRIEZE, {
      units: ["1-5", "2-5", "3-5"],
      margin: 1,
    });
    const rows = html.match(/frieze-row/g);
    expect(rows).toHaveLength(7); // order 6: one less than the row count
    const unitCells = html.match(/class="cell unit"/g) ?? [];
    expect(unitCells.length).toBeGreaterThanOrEqual(3);
    expect(html).toContain('data-chord="4-6"');
  });

  it("applies region and delta overlays to every entry cell", () => {
    const regions: Record<string, string> = {
      "1-3": "Sa", "1-4": "RayCa", "1-5": "F", "2-4": "RayC", "2-5": "PaShift",
      "2-6": "RayB", "3-5": "F", "3-6": "RayBa", "4-6": "BC",
    };
    const delta: Record<string, number> = {
      "1-3": 1, "1-4": 1, "1-5": 0, "2-4": -1, "2-5": -1,
      "2-6": -1, "3-5": 0, "3-6": 1, "4-6": 1,
    };
    const html = renderFriezeHtml(HEX_FRIEZE, { regions, delta, margin: 0 });
    expect(html).toContain("region-PaShift");
    expect(html).toContain("region-Sa");
    expect(html).toContain('data-delta="-1"');
    // overlaying an incomplete region map is a hard error
    expect(() =>
      renderFriezeHtml(HEX_FRIEZE, { regions: { "1-3": "Sa" }, margin: 0 }),
    ).toThrow();
  });

  it("abbreviates long entries and keeps the full value on hover", () => {
    expect(abbreviate("123456")).toBe("123456");
    expect(abbreviate("12345678")).toBe("123…78");
    const big: FriezePayload = {
      n: 4,
      entries: { "1-3": "12345678901", "2-4": "1" },
    };
    const html = renderFriezeHtml(big, { margin: 0 });
    expect(html).toContain('title="12345678901"');
    expect(html).toContain("123…01");
  });
});
