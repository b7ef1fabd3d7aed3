import { ApiClient, ApiError } from "./api.js";
import { hitTestDiagonal, renderFriezeHtml, renderPolygonSvg } from "./render.js";
import { ExplorerState } from "./state.js";
import type { FlipResponse, TriangulationData } from "./types.js";
import {
  encodeTriangulation,
  triangulationFromQuery,
  triangulationToQuery,
} from "./url.js";

const DEFAULT_TRIANGULATION: TriangulationData = {
  n: 6,
  diagonals: [
    [1, 5],
    [2, 5],
    [3, 5],
  ],
};

const api = new ApiClient("");
const initial = triangulationFromQuery(location.search) ?? DEFAULT_TRIANGULATION;
const state = new ExplorerState(api, initial);

const els = {
  polygon: document.getElementById("polygon")!,
  frieze: document.getElementById("frieze")!,
  status: document.getElementById("status")!,
  undo: document.getElementById("undo") as HTMLButtonElement,
  redo: document.getElementById("redo") as HTMLButtonElement,
  overlayToggle: document.getElementById("overlay-toggle") as HTMLInputElement,
  share: document.getElementById("share")!,
};

const flipPreviewCache = new Map<string, FlipResponse>();
let hovered: { at: string; partner: string } | null = null;

function setStatus(text: string, isError = false): void {
  els.status.textContent = text;
  els.status.classList.toggle("error", isError);
}

function render(): void {
  els.polygon.innerHTML = renderPolygonSvg(state.current, {
    selected: state.selected,
    preview: hovered,
  });
  const overlayOn = els.overlayToggle.checked && state.lastMutation !== null;
  els.frieze.innerHTML = state.frieze
    ? renderFriezeHtml(state.frieze, {
        units: state.unitPositions,
        regions: overlayOn ? state.lastMutation!.regions : null,
        delta: overlayOn ? state.lastMutation!.delta : null,
      })
    : "";
  els.undo.disabled = state.busy || !state.canUndo;
  els.redo.disabled = state.busy || !state.canRedo;
  document.body.classList.toggle("busy", state.busy);
  const share = `${location.origin}${location.pathname}?${triangulationToQuery(state.current)}`;
  els.share.setAttribute("href", share);
  els.share.textContent = encodeTriangulation(state.current);
  if (state.lastMutation) {
    animateChange();
  }
}

function animateChange(): void {
  const before = state.lastMutation!.frieze_before.entries;
  const after = state.lastMutation!.frieze_after.entries;
  for (const cell of els.frieze.querySelectorAll<HTMLElement>(".cell[data-chord]")) {
    const key = cell.dataset.chord!;
    if (before[key] !== after[key]) cell.classList.add("changed");
  }
}

async function flipAt(key: string): Promise<void> {
  if (state.busy) return;
  setStatus(`flipping ${key}...`);
  try {
    await state.flip(key);
    history.replaceState(null, "", `?${triangulationToQuery(state.current)}`);
    setStatus(`flipped ${key} -> ${state.history[state.history.length - 1]!.newDiagonal}`);
  } catch (err) {
    setStatus(err instanceof ApiError ? err.message : String(err), true);
  }
  hovered = null;
  render();
}

els.polygon.addEventListener("click", (ev) => {
  const rect = els.polygon.getBoundingClientRect();
  const scale = 420 / rect.width;
  const key = hitTestDiagonal(state.current, {
    x: (ev.clientX - rect.left) * scale,
    y: (ev.clientY - rect.top) * scale,
  });
  if (key) void flipAt(key);
});

els.polygon.addEventListener("mousemove", (ev) => {
  const rect = els.polygon.getBoundingClientRect();
  const scale = 420 / rect.width;
  const key = hitTestDiagonal(state.current, {
    x: (ev.clientX - rect.left) * scale,
    y: (ev.clientY - rect.top) * scale,
  });
  if (!key) {
    if (hovered) {
      hovered = null;
      render();
    }
    return;
  }
  if (hovered?.at === key) return;
  const cacheKey = `${encodeTriangulation(state.current)}|${key}`;
  const cached = flipPreviewCache.get(cacheKey);
  if (cached) {
    hovered = { at: key, partner: cached.new_diagonal };
    render();
    return;
  }
  void api.flip(state.current, key).then((res) => {
    flipPreviewCache.set(cacheKey, res);
    hovered = { at: key, partner: res.new_diagonal };
    render();
  });
});

els.undo.addEventListener("click", () => {
  void state.undo().then((done) => {
    if (done) setStatus("undone");
    render();
  });
});

els.redo.addEventListener("click", () => {
  void state.redo().then((done) => {
    if (done) setStatus("redone");
    render();
  });
});

els.overlayToggle.addEventListener("change", render);

state
  .load()
  .then(() => {
    setStatus("ready; click a diagonal to flip it");
    render();
  })
  .catch((err) => {
    setStatus(
      err instanceof ApiError
        ? `cannot load triangulation: ${err.message}`
        : String(err),
      true,
    );
  });
