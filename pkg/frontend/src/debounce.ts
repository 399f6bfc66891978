/** Slider request pacing: during a drag, fire after 150 ms of idleness;
 * on release, fire immediately and cancel any pending idle timer. */

export interface DragDebouncer {
  onDrag(): void;
  onRelease(): void;
  cancel(): void;
}

export const DRAG_IDLE_MS = 150;

export function createDragDebouncer(fire: () => void, idleMs: number = DRAG_IDLE_MS): DragDebouncer {
  let timer: ReturnType<typeof setTimeout> | null = null;

  const clear = () => {
    if (timer !== null) {
      clearTimeout(timer);
      timer = null;
    }
  };

  return {
    onDrag() {
      clear();
      timer = setTimeout(() => {
        timer = null;
        fire();
      }, idleMs);
    },
    onRelease() {
      clear();
      fire();
    },
    cancel: clear,
  };
}
