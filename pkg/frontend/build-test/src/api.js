/**
 * Typed client for the engine's HTTP API.
 *
 * The fetch function is injected so the client runs identically against
 * the real server and a stub in tests.
 */
/** Error carrying the server's machine-readable code ("network" if none). */
export class ApiError extends Error {
    code;
    constructor(code, message) {
        super(message);
        this.code = code;
    }
}
async function errorFrom(response) {
    try {
        const payload = (await response.json());
        return new ApiError(payload.code ?? "internal", payload.message ?? `server returned ${response.status}`);
    }
    catch {
        return new ApiError("internal", `server returned ${response.status}`);
    }
}
async function post(fetchFn, url, body) {
    let response;
    try {
        response = await fetchFn(url, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
        });
    }
    catch {
        throw new ApiError("network", "could not reach the server");
    }
    if (!response.ok) {
        throw await errorFrom(response);
    }
    return response;
}
export class ApiClient {
    fetchFn;
    baseUrl;
    constructor(fetchFn, baseUrl = "") {
        this.fetchFn = fetchFn;
        this.baseUrl = baseUrl;
    }
    async translate(text) {
        const response = await post(this.fetchFn, `${this.baseUrl}/api/translate`, {
            text,
        });
        return (await response.json());
    }
    async speak(text, language) {
        const response = await post(this.fetchFn, `${this.baseUrl}/api/speak`, {
            text,
            language,
        });
        return response.arrayBuffer();
    }
    async health() {
        try {
            const response = await this.fetchFn(`${this.baseUrl}/api/health`);
            return response.ok;
        }
        catch {
            return false;
        }
    }
}
