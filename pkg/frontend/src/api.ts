/** Typed client for the /v1 JSON API.
 *
 * Successful responses are unwrapped from the {"schema_version", "result"}
 * envelope; error envelopes become ApiError with the server's closed-set
 * code; transport failures become ApiError with code "unreachable" so the
 * shell can show its retry banner.
 */

import { requestHash } from "./hash.js";
import type {
  BuiltinAccountsResult,
  CompareRequest,
  CompareResult,
  EfficiencyRequest,
  EfficiencyResult,
  Envelope,
  EvaluateRequest,
  EvaluateResult,
  PresetEntry,
  SolveRequest,
  SolveResult,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.code = code;
    this.status = status;
  }
}

export interface ApiClient {
  health(): Promise<boolean>;
  evaluate(body: EvaluateRequest): Promise<EvaluateResult>;
  solve(body: SolveRequest): Promise<SolveResult>;
  presets(): Promise<PresetEntry[]>;
  compare(body: CompareRequest): Promise<CompareResult>;
  relativeEfficiency(body: EfficiencyRequest): Promise<EfficiencyResult>;
  builtinAccounts(): Promise<BuiltinAccountsResult>;
  /** Cached responses keyed by request hash (canonical body). */
  readonly cache: ReadonlyMap<string, unknown>;
  clearCache(): void;
}

async function unwrap<T>(response: Response): Promise<T> {
  let body: Envelope<T>;
  try {
    body = (await response.json()) as Envelope<T>;
  } catch {
    throw new ApiError("unreachable", `invalid response (${response.status})`, response.status);
  }
  if (body.error) {
    throw new ApiError(body.error.code, body.error.message, response.status);
  }
  if (!response.ok || body.result === undefined) {
    throw new ApiError("unreachable", `unexpected response (${response.status})`, response.status);
  }
  return body.result;
}

export function createClient(baseUrl: string, fetchFn?: FetchLike): ApiClient {
  const doFetch: FetchLike = fetchFn ?? ((input, init) => fetch(input, init));
  const cache = new Map<string, unknown>();
  const inFlight = new Map<string, Promise<unknown>>();

  async function request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const key = requestHash(method, path, body);
    if (cache.has(key)) {
      return cache.get(key) as T;
    }
    const pending = inFlight.get(key);
    if (pending) {
      return pending as Promise<T>;
    }
    const promise = (async () => {
      let response: Response;
      try {
        response = await doFetch(`${baseUrl}${path}`, {
          method,
          headers: body === undefined ? undefined : { "content-type": "application/json" },
          body: body === undefined ? undefined : JSON.stringify(body),
        });
      } catch (cause) {
        throw new ApiError("unreachable", `service unreachable: ${String(cause)}`, 0);
      }
      const result = await unwrap<T>(response);
      cache.set(key, result);
      return result;
    })();
    inFlight.set(key, promise);
    try {
      return await promise;
    } finally {
      inFlight.delete(key);
    }
  }

  return {
    async health() {
      try {
        const response = await doFetch(`${baseUrl}/v1/health`, { method: "GET" });
        return response.ok;
      } catch {
        return false;
      }
    },
    evaluate: (body) => request("POST", "/v1/evaluate", body),
    solve: (body) => request("POST", "/v1/solve", body),
    presets: () => request("GET", "/v1/scenarios/presets"),
    compare: (body) => request("POST", "/v1/scenarios/compare", body),
    relativeEfficiency: (body) => request("POST", "/v1/accounting/relative-efficiency", body),
    builtinAccounts: () => request("GET", "/v1/accounting/builtin"),
    cache,
    clearCache: () => cache.clear(),
  };
}
