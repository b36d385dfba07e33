/**
 * Typed client for the engine's HTTP API.
 *
 * The fetch function is injected so the client runs identically against
 * the real server and a stub in tests.
 */

export interface ChunkView {
  source: string;
  gurmukhi: string;
  role: string;
  oov: boolean;
}

export interface TranslateResponse {
  translation: string;
  chunks: ChunkView[];
  applied_rules: string[];
  oov_count: number;
}

export type Language = "en" | "pa";

export interface ResponseLike {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
  arrayBuffer(): Promise<ArrayBuffer>;
}

export type FetchLike = (
  url: string,
  init?: {
    method?: string;
    headers?: Record<string, string>;
    body?: string;
  },
) => Promise<ResponseLike>;

/** Error carrying the server's machine-readable code ("network" if none). */
export class ApiError extends Error {
  readonly code: string;

  constructor(code: string, message: string) {
    super(message);
    this.code = code;
  }
}

async function errorFrom(response: ResponseLike): Promise<ApiError> {
  try {
    const payload = (await response.json()) as { code?: string; message?: string };
    return new ApiError(
      payload.code ?? "internal",
      payload.message ?? `server returned ${response.status}`,
    );
  } catch {
    return new ApiError("internal", `server returned ${response.status}`);
  }
}

async function post(
  fetchFn: FetchLike,
  url: string,
  body: object,
): Promise<ResponseLike> {
  let response: ResponseLike;
  try {
    response = await fetchFn(url, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  } catch {
    throw new ApiError("network", "could not reach the server");
  }
  if (!response.ok) {
    throw await errorFrom(response);
  }
  return response;
}

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike,
    private readonly baseUrl = "",
  ) {}

  async translate(text: string): Promise<TranslateResponse> {
    const response = await post(this.fetchFn, `${this.baseUrl}/api/translate`, {
      text,
    });
    return (await response.json()) as TranslateResponse;
  }

  async speak(text: string, language: Language): Promise<ArrayBuffer> {
    const response = await post(this.fetchFn, `${this.baseUrl}/api/speak`, {
      text,
      language,
    });
    return response.arrayBuffer();
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchFn(`${this.baseUrl}/api/health`);
      return response.ok;
    } catch {
      return false;
    }
  }
}
