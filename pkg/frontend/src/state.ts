/** Readout state with stale-tracking.
 *
 * Every input edit bumps a generation counter and immediately demotes the
 * current value to "stale" (greyed in the UI) so no outdated number is ever
 * shown as current. A response is applied only if it belongs to the latest
 * generation: in-flight answers for older inputs lose to the newest writer.
 */

export type SlotState<T> =
  | { kind: "empty" }
  | { kind: "pending"; previous: T | null }
  | { kind: "ready"; value: T }
  | { kind: "stale"; previous: T | null }
  | { kind: "error"; message: string; code: string };

export class ResponseSlot<T> {
  private generation = 0;
  private state: SlotState<T> = { kind: "empty" };
  private listeners = new Set<(state: SlotState<T>) => void>();

  get current(): SlotState<T> {
    return this.state;
  }

  /** The latest value regardless of freshness (for greyed-out rendering). */
  get lastValue(): T | null {
    const s = this.state;
    if (s.kind === "ready") return s.value;
    if (s.kind === "pending" || s.kind === "stale") return s.previous;
    return null;
  }

  subscribe(listener: (state: SlotState<T>) => void): () => void {
    this.listeners.add(listener);
    listener(this.state);
    return () => this.listeners.delete(listener);
  }

  /** An input changed: whatever is displayed is no longer trustworthy. */
  invalidate(): number {
    this.generation += 1;
    this.set({ kind: "stale", previous: this.lastValue });
    return this.generation;
  }

  /** A request for the given generation went out. */
  begin(generation: number): void {
    if (generation === this.generation) {
      this.set({ kind: "pending", previous: this.lastValue });
    }
  }

  /** Last-writer-wins: only the newest generation may publish. */
  resolve(generation: number, value: T): boolean {
    if (generation !== this.generation) {
      return false;
    }
    this.set({ kind: "ready", value });
    return true;
  }

  fail(generation: number, code: string, message: string): boolean {
    if (generation !== this.generation) {
      return false;
    }
    this.set({ kind: "error", code, message });
    return true;
  }

  private set(state: SlotState<T>): void {
    this.state = state;
    for (const listener of this.listeners) {
      listener(state);
    }
  }
}

/** Convenience: wire a slot to an async fetcher with generation tracking. */
export function refreshSlot<T>(slot: ResponseSlot<T>, load: () => Promise<T>): Promise<void> {
  const generation = slot.invalidate();
  slot.begin(generation);
  return load().then(
    (value) => {
      slot.resolve(generation, value);
    },
    (error: unknown) => {
      const code = (error as { code?: string }).code ?? "error";
      slot.fail(generation, code, error instanceof Error ? error.message : String(error));
    },
  );
}
