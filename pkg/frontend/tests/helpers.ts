/** Test utilities: recorded-flow loading, a fetch stub that replays the
 * recorded responses, and small DOM drivers. */
import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

export interface Step {
  method: string;
  path: string;
  body: unknown;
  status: number;
  response: unknown;
}

export function loadFlow(name: string): Step[] {
  const here = dirname(fileURLToPath(import.meta.url));
  return JSON.parse(readFileSync(join(here, 'fixtures', `${name}.json`), 'utf8')) as Step[];
}

/** The nth recorded step for one method and path. */
export function step(flow: Step[], method: string, path: string, occurrence = 0): Step {
  const hits = flow.filter((s) => s.method === method && s.path === path);
  const hit = hits[occurrence];
  if (hit === undefined) throw new Error(`no recorded step ${method} ${path} #${occurrence}`);
  return hit;
}

export interface RecordedCall {
  method: string;
  path: string;
  body: unknown;
}

/** Replays recorded responses keyed by method and path.  Repeats of one
 * request drain their queue and then stick on its last response. */
export class FetchStub {
  private queues = new Map<string, Step[]>();
  readonly calls: RecordedCall[] = [];

  constructor(steps: Step[]) {
    for (const s of steps) {
      const key = `${s.method} ${s.path}`;
      const queue = this.queues.get(key) ?? [];
      queue.push(s);
      this.queues.set(key, queue);
    }
  }

  install(): void {
    const stub = async (input: unknown, init?: RequestInit) => {
      const url = typeof input === 'string' ? input : String(input);
      const path = new URL(url).pathname;
      const method = init?.method ?? 'GET';
      const body = init?.body === undefined ? null : JSON.parse(String(init.body));
      this.calls.push({ method, path, body });
      const queue = this.queues.get(`${method} ${path}`);
      if (queue === undefined || queue.length === 0) {
        return {
          ok: false,
          status: 599,
          text: async () => JSON.stringify({ detail: `no recorded response for ${method} ${path}` }),
        };
      }
      const served = queue.length > 1 ? queue.shift()! : queue[0]!;
      return {
        ok: served.status < 400,
        status: served.status,
        text: async () => JSON.stringify(served.response),
      };
    };
    (globalThis as { fetch: unknown }).fetch = stub;
  }

  proposeBodies(): unknown[] {
    return this.calls.filter((c) => c.path.endsWith('/propose')).map((c) => c.body);
  }
}

export function click(root: ParentNode, selector: string): void {
  const found = root.querySelector(selector);
  if (found === null) throw new Error(`no element matches ${selector}`);
  found.dispatchEvent(new MouseEvent('click', { bubbles: true }));
}

export function setInput(root: ParentNode, selector: string, value: string): void {
  const found = root.querySelector(selector);
  if (found === null) throw new Error(`no element matches ${selector}`);
  (found as HTMLInputElement).value = value;
}

export function setSelect(root: ParentNode, selector: string, value: string): void {
  const found = root.querySelector(selector);
  if (found === null) throw new Error(`no element matches ${selector}`);
  (found as HTMLSelectElement).value = value;
  found.dispatchEvent(new Event('change', { bubbles: true }));
}

export function textOf(root: ParentNode, selector: string): string {
  const found = root.querySelector(selector);
  if (found === null) throw new Error(`no element matches ${selector}`);
  return found.textContent ?? '';
}
