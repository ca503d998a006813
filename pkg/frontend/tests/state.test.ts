import { describe, expect, it } from 'vitest';

import {
  applySession,
  assignments,
  cellAt,
  cellState,
  decisionsDoc,
  newViewState,
  proposalPayload,
  toggleCell,
  toggleDecision,
} from '../src/state.js';
import type { SessionDoc } from '../src/types.js';
import { loadFlow, step } from './helpers.js';

const twoByTwo = () => newViewState('s', { machines: 2, processing_times: [1, 1] });

describe('cell toggles', () => {
  it('assigns a free cell', () => {
    const state = twoByTwo();
    expect(toggleCell(state, 1, 1)).toBe(true);
    expect(assignments(state)).toEqual([[1, 1]]);
  });

  it('frees an assigned cell again', () => {
    const state = twoByTwo();
    toggleCell(state, 1, 1);
    expect(toggleCell(state, 1, 1)).toBe(true);
    expect(assignments(state)).toEqual([]);
    expect(proposalPayload(state)).toEqual({ schedule: { assignments: [] }, decisions: null });
  });

  it('refuses to assign a banned cell and says why', () => {
    const state = twoByTwo();
    toggleDecision(state, 2, 2, 'negative');
    expect(toggleCell(state, 2, 2)).toBe(false);
    expect(state.message).toContain('banned by a negative decision');
    expect(assignments(state)).toEqual([]);
    expect(cellState(cellAt(state, 2, 2))).toBe('decision-locked');
  });

  it('refuses to unassign a required cell and says why', () => {
    const state = twoByTwo();
    toggleCell(state, 1, 1);
    toggleDecision(state, 1, 1, 'positive');
    expect(toggleCell(state, 1, 1)).toBe(false);
    expect(state.message).toContain('required by a positive decision');
    expect(assignments(state)).toEqual([[1, 1]]);
  });

  it('still frees a cell that was banned after being assigned', () => {
    const state = twoByTwo();
    toggleCell(state, 2, 2);
    expect(toggleDecision(state, 2, 2, 'negative')).toBe(true); // conflict stays visible
    expect(assignments(state)).toEqual([[2, 2]]);
    expect(toggleCell(state, 2, 2)).toBe(true);
    expect(assignments(state)).toEqual([]);
  });
});

describe('decision toggles', () => {
  it('keeps the two signs disjoint on a cell', () => {
    const state = twoByTwo();
    toggleDecision(state, 2, 2, 'negative');
    expect(toggleDecision(state, 2, 2, 'positive')).toBe(false);
    expect(state.message).toContain('must be disjoint');
    expect(decisionsDoc(state)).toEqual({ negative: [[2, 2]], positive: [] });
  });

  it('pins a job to at most one machine', () => {
    const state = twoByTwo();
    toggleDecision(state, 1, 1, 'positive');
    expect(toggleDecision(state, 2, 1, 'positive')).toBe(false);
    expect(state.message).toContain('one machine per job');
    expect(decisionsDoc(state)).toEqual({ negative: [], positive: [[1, 1]] });
  });

  it('clears a mark when toggled twice', () => {
    const state = twoByTwo();
    toggleDecision(state, 2, 2, 'negative');
    expect(toggleDecision(state, 2, 2, 'negative')).toBe(true);
    expect(decisionsDoc(state)).toEqual({ negative: [], positive: [] });
    expect(cellState(cellAt(state, 2, 2))).toBe('free');
  });

  it('keeps proposals free of decisions until a mark is touched', () => {
    const state = twoByTwo();
    toggleCell(state, 1, 1);
    expect(proposalPayload(state).decisions).toBeNull();
    toggleDecision(state, 2, 2, 'negative');
    expect(proposalPayload(state).decisions).toEqual({ negative: [[2, 2]], positive: [] });
  });
});

describe('server state mirroring', () => {
  const flow = loadFlow('decisions_flow');

  it('shows the baseline of a fresh session', () => {
    const exported = step(flow, 'GET', '/sessions/fx-decisions').response as SessionDoc;
    const state = newViewState(exported.id, exported.instance);
    applySession(state, exported);
    expect(assignments(state)).toEqual([[1, 1], [2, 2]]);
    expect(state.decisionsActive).toBe(false);
  });

  it('shows the stored proposal and decisions after one was accepted', () => {
    const echo = step(flow, 'GET', '/sessions/fx-decisions', 1).response as SessionDoc;
    const state = newViewState(echo.id, echo.instance);
    applySession(state, echo);
    expect(assignments(state)).toEqual([[1, 1], [1, 2]]);
    expect(decisionsDoc(state)).toEqual({ negative: [[2, 2]], positive: [[1, 1]] });
    expect(cellState(cellAt(state, 1, 1))).toBe('decision-locked');
  });

  it('round-trips grid -> payload -> accepted echo -> same grid', () => {
    const exported = step(flow, 'GET', '/sessions/fx-decisions').response as SessionDoc;
    const state = newViewState(exported.id, exported.instance);
    applySession(state, exported);

    const clicks = [
      toggleCell(state, 2, 2),
      toggleCell(state, 1, 2),
      toggleDecision(state, 2, 2, 'negative'),
      toggleDecision(state, 1, 1, 'positive'),
    ];
    expect(clicks).toEqual([true, true, true, true]); // four clicks, all accepted

    const payload = proposalPayload(state);
    const proposed = step(flow, 'POST', '/sessions/fx-decisions/propose');
    expect(payload).toEqual(proposed.body);

    const echo = step(flow, 'GET', '/sessions/fx-decisions', 1).response as SessionDoc;
    applySession(state, echo);
    expect(proposalPayload(state)).toEqual(payload);
  });
});
