import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { Envelope } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  const raw = JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as Envelope<T>;
  if (raw.result === undefined) {
    throw new Error(`fixture ${name} has no result`);
  }
  return raw.result;
}

export function rawFixture(name: string): unknown {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8"));
}

/** fetch stub that replays canned bodies per URL path and counts calls. */
export function stubFetch(routes: Record<string, unknown>, status = 200) {
  const calls: { path: string; body?: unknown }[] = [];
  const fetchFn = async (input: string, init?: RequestInit): Promise<Response> => {
    const path = input.replace(/^https?:\/\/[^/]+/, "");
    calls.push({ path, body: init?.body ? JSON.parse(String(init.body)) : undefined });
    const payload = routes[path];
    if (payload === undefined) {
      throw new TypeError(`no route for ${path}`);
    }
    return {
      ok: status >= 200 && status < 300,
      status,
      json: async () => payload,
    } as Response;
  };
  return { fetchFn, calls };
}
