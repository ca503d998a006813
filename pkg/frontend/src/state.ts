/** Client-side view state: the assignment grid, decision marks, and the
 * payload they produce.  All operations are pure DOM-free functions so the
 * grid logic is testable on its own.
 *
 * The grid mirrors the last state the server accepted; edits stay local
 * until submitted.  Cell toggles refuse to contradict a decision mark, and
 * decision toggles refuse marks that no well-formed decision set allows
 * (overlapping signs, or a job pinned to two machines).
 */
import type { ProposePayload } from './api.js';
import type { AfKind, DecisionsDoc, InstanceDoc, Pair, ReportDoc, SessionDoc } from './types.js';
import { comparePairs } from './types.js';

export type DecisionMark = 'none' | 'negative' | 'positive';
export type CellState = 'assigned' | 'free' | 'decision-locked';

export interface Cell {
  assigned: boolean;
  decision: DecisionMark;
}

export interface ViewState {
  sessionId: string;
  instance: InstanceDoc;
  /** Machine-major grid; cells[i - 1][j - 1] is machine i, job j. */
  cells: Cell[][];
  /** Once any decision mark is touched, proposals carry the decision sets. */
  decisionsActive: boolean;
  afKind: AfKind;
  report: ReportDoc | null;
  /** Inline feedback from the last operation; empty when it was accepted. */
  message: string;
}

export function newViewState(sessionId: string, instance: InstanceDoc): ViewState {
  const cells = Array.from({ length: instance.machines }, () =>
    Array.from({ length: instance.processing_times.length }, (): Cell => ({
      assigned: false,
      decision: 'none',
    })));
  return {
    sessionId,
    instance,
    cells,
    decisionsActive: false,
    afKind: 'feasibility',
    report: null,
    message: '',
  };
}

export function cellAt(state: ViewState, i: number, j: number): Cell {
  const row = state.cells[i - 1];
  const cell = row === undefined ? undefined : row[j - 1];
  if (cell === undefined) throw new Error(`cell (${i}, ${j}) is out of range`);
  return cell;
}

/** The tri-state a cell renders in: decision marks trump assignment. */
export function cellState(cell: Cell): CellState {
  if (cell.decision !== 'none') return 'decision-locked';
  return cell.assigned ? 'assigned' : 'free';
}

/** Flip one assignment.  Refused when the flip would contradict the cell's
 * decision mark; flips that resolve a contradiction are fine. */
export function toggleCell(state: ViewState, i: number, j: number): boolean {
  const cell = cellAt(state, i, j);
  if (!cell.assigned && cell.decision === 'negative') {
    state.message = `cannot assign (${i}, ${j}): it is banned by a negative decision; remove the decision first`;
    return false;
  }
  if (cell.assigned && cell.decision === 'positive') {
    state.message = `cannot unassign (${i}, ${j}): it is required by a positive decision; remove the decision first`;
    return false;
  }
  cell.assigned = !cell.assigned;
  state.message = '';
  return true;
}

/** Set, or clear by repeating, one decision mark.  Marks that no
 * well-formed decision set allows are refused. */
export function toggleDecision(state: ViewState, i: number, j: number, sign: 'negative' | 'positive'): boolean {
  const cell = cellAt(state, i, j);
  if (cell.decision === sign) {
    cell.decision = 'none';
    state.decisionsActive = true;
    state.message = '';
    return true;
  }
  if (cell.decision !== 'none') {
    state.message = `(${i}, ${j}) is already a ${cell.decision} decision; the negative and positive sets must be disjoint`;
    return false;
  }
  if (sign === 'positive') {
    for (let k = 1; k <= state.instance.machines; k++) {
      if (k !== i && cellAt(state, k, j).decision === 'positive') {
        state.message = `job ${j} is already pinned to machine ${k}; one machine per job is allowed`;
        return false;
      }
    }
  }
  cell.decision = sign;
  state.decisionsActive = true;
  state.message = '';
  return true;
}

/** The assigned pairs, sorted the way schedule documents are. */
export function assignments(state: ViewState): Pair[] {
  const pairs: Pair[] = [];
  state.cells.forEach((row, mi) =>
    row.forEach((cell, ji) => {
      if (cell.assigned) pairs.push([mi + 1, ji + 1]);
    }));
  return pairs.sort(comparePairs);
}

export function decisionsDoc(state: ViewState): DecisionsDoc {
  const negative: Pair[] = [];
  const positive: Pair[] = [];
  state.cells.forEach((row, mi) =>
    row.forEach((cell, ji) => {
      if (cell.decision === 'negative') negative.push([mi + 1, ji + 1]);
      if (cell.decision === 'positive') positive.push([mi + 1, ji + 1]);
    }));
  return { negative: negative.sort(comparePairs), positive: positive.sort(comparePairs) };
}

/** What submit sends: the grid as a schedule, plus the decision sets once
 * they have been touched (so an untouched session keeps its report free of
 * the fixed dimension). */
export function proposalPayload(state: ViewState): ProposePayload {
  return {
    schedule: { assignments: assignments(state) },
    decisions: state.decisionsActive ? decisionsDoc(state) : null,
  };
}

/** Rebuild the grid from an exported session, the server's view of truth.
 * The grid shows the stored proposal, or the baseline before any. */
export function applySession(state: ViewState, doc: SessionDoc): void {
  state.sessionId = doc.id;
  state.instance = doc.instance;
  state.cells = newViewState(doc.id, doc.instance).cells;
  const shown = doc.proposal ?? doc.baseline;
  for (const [i, j] of shown.assignments) cellAt(state, i, j).assigned = true;
  if (doc.decisions !== null) {
    for (const [i, j] of doc.decisions.negative) cellAt(state, i, j).decision = 'negative';
    for (const [i, j] of doc.decisions.positive) cellAt(state, i, j).decision = 'positive';
  }
  state.decisionsActive = doc.decisions !== null;
}

/** The extension the current grid stands for (used for graph boxing). */
export function extensionPairs(state: ViewState): Pair[] {
  return assignments(state);
}
