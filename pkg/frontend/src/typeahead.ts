import { LinkRow, PredictResponse } from "./api.js";

/**
 * Keystroke debounce. 150 ms suppresses request-per-keystroke traffic
 * while staying under perceptible lag; pass a different value to the
 * constructor to override.
 */
export const DEFAULT_DEBOUNCE_MS = 150;

export interface TypeaheadView {
  query: string;
  links: LinkRow[];
  error: string | null;
}

type PredictFn = (query: string, signal: AbortSignal) => Promise<PredictResponse>;

function describe(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}

/**
 * Debounced address-bar controller.
 *
 * Guarantees: at most one predict request in flight (superseded ones are
 * aborted), and a response is rendered only if it answers the newest
 * issued query — late arrivals for old keystrokes are dropped, so the
 * rendered list always matches what the user last typed. On a failed
 * request the previous good list stays up, with an error message.
 */
export class Typeahead {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inflight: AbortController | null = null;
  private generation = 0;
  private lastGood: LinkRow[] = [];

  constructor(
    private readonly predict: PredictFn,
    private readonly render: (view: TypeaheadView) => void,
    private readonly debounceMs: number = DEFAULT_DEBOUNCE_MS,
  ) {}

  /** Feed the current input value; the fetch fires after a quiet period. */
  input(query: string): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => void this.issue(query), this.debounceMs);
  }

  /** Drop any pending timer and abort the in-flight request, if any. */
  cancel(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    this.generation++;
    this.inflight?.abort();
    this.inflight = null;
  }

  private async issue(query: string): Promise<void> {
    this.timer = null;
    const generation = ++this.generation;
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    try {
      const response = await this.predict(query, controller.signal);
      if (generation !== this.generation) {
        return; // superseded while awaiting: never render a stale response
      }
      this.lastGood = response.links;
      this.render({ query, links: response.links, error: null });
    } catch (err) {
      if (generation !== this.generation) {
        return; // the abort of an already-superseded request
      }
      this.render({ query, links: this.lastGood, error: describe(err) });
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
      }
    }
  }
}
