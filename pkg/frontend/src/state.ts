import type { ApiClient } from "./api.js";
import type {
  FlipMove,
  FriezePayload,
  MutateResponse,
  TriangulationData,
} from "./types.js";
import { sameTriangulation, sortedDiagonals } from "./types.js";

/**
 * All mathematics stays server-side: this store only sequences requests
 * and keeps the last validated payloads.  The displayed frieze is always
 * exactly what /api/frieze (or /api/mutate) returned for the displayed
 * triangulation.
 */
export class ExplorerState {
  current: TriangulationData;
  frieze: FriezePayload | null = null;
  unitPositions: string[] = [];
  selected: string | null = null;
  /** regions/delta payload of the most recent flip, for the overlay */
  lastMutation: MutateResponse | null = null;
  busy = false;

  private undoStack: FlipMove[] = [];
  private redoStack: FlipMove[] = [];
  private initial: TriangulationData;

  constructor(
    private readonly api: ApiClient,
    initial: TriangulationData,
  ) {
    this.current = initial;
    this.initial = initial;
  }

  /** Validate the current triangulation via the API and load its frieze. */
  async load(): Promise<void> {
    const res = await this.api.frieze(this.current);
    this.frieze = res.frieze;
    this.unitPositions = res.unit_positions;
  }

  get canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  get canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  get history(): readonly FlipMove[] {
    return this.undoStack;
  }

  /** Flip one diagonal through /api/mutate and push the move. */
  async flip(at: string): Promise<MutateResponse> {
    if (this.busy) throw new Error("a flip is already in flight");
    this.busy = true;
    try {
      const res = await this.api.mutate(this.current, at);
      this.undoStack.push({ at, newDiagonal: res.flip.new_diagonal });
      this.redoStack = [];
      this.current = res.flip.triangulation;
      this.frieze = res.frieze_after;
      this.unitPositions = sortedDiagonals(res.flip.triangulation);
      this.lastMutation = res;
      this.selected = null;
      return res;
    } finally {
      this.busy = false;
    }
  }

  /** Undo the last flip by replaying its inverse through /api/flip. */
  async undo(): Promise<boolean> {
    const move = this.undoStack.pop();
    if (!move) return false;
    if (this.busy) {
      this.undoStack.push(move);
      throw new Error("a flip is already in flight");
    }
    this.busy = true;
    try {
      const res = await this.api.flip(this.current, move.newDiagonal);
      this.current = res.triangulation;
      this.redoStack.push(move);
      this.lastMutation = null;
      await this.load();
      return true;
    } finally {
      this.busy = false;
    }
  }

  /** Redo the most recently undone flip. */
  async redo(): Promise<boolean> {
    const move = this.redoStack.pop();
    if (!move) return false;
    if (this.busy) {
      this.redoStack.push(move);
      throw new Error("a flip is already in flight");
    }
    this.busy = true;
    try {
      const res = await this.api.flip(this.current, move.at);
      this.current = res.triangulation;
      this.undoStack.push(move);
      this.lastMutation = null;
      await this.load();
      return true;
    } finally {
      this.busy = false;
    }
  }

  /**
   * Replay the whole history from the initial triangulation via /api/flip;
   * must land exactly on the current state.
   */
  async replayHistory(): Promise<TriangulationData> {
    let t = this.initial;
    for (const move of this.undoStack) {
      const res = await this.api.flip(t, move.at);
      t = res.triangulation;
    }
    if (!sameTriangulation(t, this.current)) {
      throw new Error("history replay diverged from the current state");
    }
    return t;
  }
}
