import type {
  ArticlePayload,
  CondensedPayload,
  CondensedSingle,
  EntityFrequency,
  HealthPayload,
  SearchHit,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

/** Thin client over the five endpoints. At most one request per endpoint
 * kind is in flight: a newer call aborts the older one (latest wins). */
export class ApiClient {
  private controllers = new Map<string, AbortController>();

  constructor(private base: string = "") {}

  private async get<T>(kind: string, path: string): Promise<T> {
    this.controllers.get(kind)?.abort();
    const controller = new AbortController();
    this.controllers.set(kind, controller);
    const response = await fetch(this.base + path, {
      signal: controller.signal,
    });
    if (!response.ok) {
      let code = "internal";
      let message = `HTTP ${response.status}`;
      try {
        const body = (await response.json()) as { code?: string; message?: string };
        if (body.code) code = body.code;
        if (body.message) message = body.message;
      } catch {
        // non-JSON error body; keep defaults
      }
      throw new ApiError(response.status, code, message);
    }
    return (await response.json()) as T;
  }

  health(): Promise<HealthPayload> {
    return this.get("health", "/api/health");
  }

  search(query: string, limit?: number): Promise<SearchHit[]> {
    const params = new URLSearchParams({ q: query });
    if (limit !== undefined) params.set("limit", String(limit));
    return this.get("search", `/api/search?${params}`);
  }

  article(docId: string): Promise<ArticlePayload> {
    return this.get("article", `/api/articles/${encodeURIComponent(docId)}`);
  }

  condensed(docId: string): Promise<CondensedPayload> {
    return this.get(
      "condensed",
      `/api/articles/${encodeURIComponent(docId)}/condensed`,
    );
  }

  condensedFor(docId: string, qsIndex: number): Promise<CondensedSingle> {
    return this.get(
      "condensed",
      `/api/articles/${encodeURIComponent(docId)}/condensed?qs=${qsIndex}`,
    );
  }

  entities(docId: string): Promise<EntityFrequency[]> {
    return this.get(
      "entities",
      `/api/articles/${encodeURIComponent(docId)}/entities`,
    );
  }
}
