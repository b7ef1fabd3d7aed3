import type {
  FlipResponse,
  FriezeResponse,
  MutateResponse,
  TriangulationData,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
    public readonly field?: string,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const res = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!res.ok) {
      const payload = await res.json().catch(() => null);
      const err = payload?.error;
      throw new ApiError(res.status, err?.message ?? res.statusText, err?.field);
    }
    return (await res.json()) as T;
  }

  async health(): Promise<{ status: string; version: string }> {
    const res = await this.fetchFn(`${this.baseUrl}/api/health`);
    if (!res.ok) throw new ApiError(res.status, res.statusText);
    return (await res.json()) as { status: string; version: string };
  }

  frieze(triangulation: TriangulationData): Promise<FriezeResponse> {
    return this.post("/api/frieze", { triangulation });
  }

  flip(triangulation: TriangulationData, at: string): Promise<FlipResponse> {
    return this.post("/api/flip", { triangulation, at });
  }

  mutate(triangulation: TriangulationData, at: string): Promise<MutateResponse> {
    return this.post("/api/mutate", { triangulation, at });
  }

  async submodules(query: { shape?: string; walk?: string }): Promise<string> {
    const res = await this.post<{ count: string }>("/api/submodules", query);
    return res.count;
  }
}
