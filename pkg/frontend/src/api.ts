/** Typed fetch client for the what-if service HTTP API. */
import type { AfDoc, AfKind, DecisionsDoc, ReportDoc, ScheduleDoc, SessionDoc } from './types.js';

let base = 'http://127.0.0.1:8000';

export function setApiBase(url: string): void {
  base = url.replace(/\/+$/, '');
}

export function apiBase(): string {
  return base;
}

async function request<T>(method: string, path: string, body?: unknown): Promise<T> {
  const init: RequestInit = { method, headers: { 'content-type': 'application/json' } };
  if (body !== undefined) init.body = JSON.stringify(body);
  const r = await fetch(base + path, init);
  const text = await r.text();
  if (!r.ok) {
    let detail = text;
    try {
      detail = JSON.parse(text).detail ?? text;
    } catch {
      // not JSON; show the raw body
    }
    throw new Error(`${method} ${path} -> ${r.status}: ${detail}`);
  }
  return JSON.parse(text) as T;
}

export interface ProposePayload {
  schedule: ScheduleDoc | null;
  decisions: DecisionsDoc | null;
}

export const Api = {
  createSession: (machines: number, processingTimes: number[], solver: string) =>
    request<{ id: string }>('POST', '/sessions', {
      machines,
      processing_times: processingTimes,
      solver,
    }),
  getSession: (sid: string) => request<SessionDoc>('GET', `/sessions/${sid}`),
  propose: (sid: string, payload: ProposePayload) =>
    request<ReportDoc>('POST', `/sessions/${sid}/propose`, payload),
  getAf: (sid: string, kind: AfKind) => request<AfDoc>('GET', `/sessions/${sid}/af/${kind}`),
};
