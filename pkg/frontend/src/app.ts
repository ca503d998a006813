/** Page wiring: one session, one grid, one report panel, one graph.
 *
 * All service calls go through a single task chain, so user actions are
 * serialized and `whenIdle()` lets scripted tests await quiescence.  The
 * page never computes findings itself; it renders what the server said and
 * refreshes the grid from the exported session after every accepted
 * proposal.
 */
import { Api, setApiBase } from './api.js';
import { renderAfGraph } from './graph.js';
import { renderReport } from './report.js';
import {
  applySession,
  cellState,
  extensionPairs,
  newViewState,
  proposalPayload,
  toggleCell,
  toggleDecision,
  type ViewState,
} from './state.js';
import { DIMENSION_KIND, type AfDoc, type AfKind, type ExplanationDoc } from './types.js';

const TEMPLATE = `
<h1>Schedule what-if explorer</h1>
<section id="setup">
  <label>service <input id="api-base" value="http://127.0.0.1:8000" size="24"></label>
  <label>machines <input id="machines" type="number" min="1" value="2"></label>
  <label>processing times <input id="times" value="1, 1" size="16"></label>
  <label>solver
    <select id="solver">
      <option value="lpt">lpt</option>
      <option value="exact">exact</option>
    </select>
  </label>
  <button id="create">start session</button>
</section>
<p id="message" class="message"></p>
<section id="workspace" hidden>
  <p id="session-line"></p>
  <table id="grid"></table>
  <p class="hint">cell: toggle assignment &middot; +: require the slot &middot; -: ban the slot</p>
  <div id="controls">
    <label>framework
      <select id="af-kind">
        <option value="feasibility">feasibility</option>
        <option value="optimality">optimality</option>
        <option value="fixed">fixed</option>
      </select>
    </label>
    <button id="submit">submit proposal</button>
  </div>
  <div id="report"></div>
  <svg id="graph"></svg>
</section>
`;

export interface AppHandle {
  /** Resolves when every queued service interaction has settled. */
  whenIdle(): Promise<void>;
  getState(): ViewState | null;
}

export function mountApp(root: HTMLElement): AppHandle {
  root.innerHTML = TEMPLATE;
  const pick = <T extends Element>(selector: string): T => {
    const found = root.querySelector(selector);
    if (found === null) throw new Error(`missing element ${selector}`);
    return found as T;
  };
  const apiBaseInput = pick<HTMLInputElement>('#api-base');
  const machinesInput = pick<HTMLInputElement>('#machines');
  const timesInput = pick<HTMLInputElement>('#times');
  const solverSelect = pick<HTMLSelectElement>('#solver');
  const createButton = pick<HTMLButtonElement>('#create');
  const messageLine = pick<HTMLParagraphElement>('#message');
  const workspace = pick<HTMLElement>('#workspace');
  const sessionLine = pick<HTMLParagraphElement>('#session-line');
  const grid = pick<HTMLTableElement>('#grid');
  const kindSelect = pick<HTMLSelectElement>('#af-kind');
  const submitButton = pick<HTMLButtonElement>('#submit');
  const reportRoot = pick<HTMLDivElement>('#report');
  const graphSvg = pick<SVGElement>('#graph');

  let state: ViewState | null = null;
  let selected: number | null = null;
  let lastAf: AfDoc | null = null;
  let busy: Promise<void> = Promise.resolve();

  const enqueue = (task: () => Promise<void>): void => {
    busy = busy.then(task).catch((err: unknown) => {
      setMessage(err instanceof Error ? err.message : String(err), true);
    });
  };

  function setMessage(text: string, isError = false): void {
    messageLine.textContent = text;
    messageLine.className = 'message' + (text === '' ? '' : isError ? ' error' : ' info');
  }

  function renderGridPanel(): void {
    const s = state;
    if (s === null) return;
    grid.textContent = '';
    const head = document.createElement('tr');
    head.appendChild(document.createElement('th'));
    s.instance.processing_times.forEach((p, ji) => {
      const th = document.createElement('th');
      th.textContent = `job ${ji + 1} (p=${p})`;
      head.appendChild(th);
    });
    grid.appendChild(head);
    s.cells.forEach((row, mi) => {
      const tr = document.createElement('tr');
      const th = document.createElement('th');
      th.textContent = `machine ${mi + 1}`;
      tr.appendChild(th);
      row.forEach((cell, ji) => {
        const key = `${mi + 1},${ji + 1}`;
        const td = document.createElement('td');
        const classes = ['cell', cellState(cell)];
        if (cell.assigned) classes.push('on');
        if (cell.decision !== 'none') classes.push(cell.decision);
        const button = document.createElement('button');
        button.className = classes.join(' ');
        button.dataset.cell = key;
        button.title = `(${mi + 1}, ${ji + 1})`;
        button.textContent = cell.assigned ? 'x' : '';
        td.appendChild(button);
        const marks = document.createElement('span');
        marks.className = 'marks';
        const pin = document.createElement('button');
        pin.dataset.pin = key;
        pin.textContent = '+';
        pin.className = 'mark' + (cell.decision === 'positive' ? ' active' : '');
        const ban = document.createElement('button');
        ban.dataset.ban = key;
        ban.textContent = '-';
        ban.className = 'mark' + (cell.decision === 'negative' ? ' active' : '');
        marks.appendChild(pin);
        marks.appendChild(ban);
        td.appendChild(marks);
        tr.appendChild(td);
      });
      grid.appendChild(tr);
    });
  }

  function rowsForKind(): ExplanationDoc[] {
    if (state === null || state.report === null) return [];
    return state.report.explanations.filter((x) => DIMENSION_KIND[x.dimension] === state!.afKind);
  }

  function selectedRow(): ExplanationDoc | null {
    if (state === null || state.report === null || selected === null) return null;
    const row = state.report.explanations[selected];
    if (row === undefined || DIMENSION_KIND[row.dimension] !== state.afKind) return null;
    return row;
  }

  function renderReportPanel(): void {
    renderReport(reportRoot, state?.report ?? null, selected, { onSelect });
  }

  async function refreshGraph(): Promise<void> {
    const s = state;
    if (s === null) return;
    kindSelect.value = s.afKind;
    if (lastAf === null || lastAf.kind !== s.afKind) {
      try {
        lastAf = await Api.getAf(s.sessionId, s.afKind);
      } catch (err) {
        lastAf = null;
        renderAfGraph(graphSvg, { kind: s.afKind, arguments: [], attacks: [] }, { extension: [], explanations: [] });
        throw err;
      }
    }
    renderAfGraph(graphSvg, lastAf, {
      extension: extensionPairs(s),
      explanations: rowsForKind(),
      selected: selectedRow(),
    });
  }

  async function doCreate(): Promise<void> {
    setApiBase(apiBaseInput.value.trim());
    const machines = Number(machinesInput.value);
    const times = timesInput.value.split(',').map((part) => Number(part.trim()));
    if (!Number.isInteger(machines) || machines < 1) {
      setMessage('machines must be a positive integer', true);
      return;
    }
    if (times.length === 0 || times.some((t) => !Number.isInteger(t) || t < 1)) {
      setMessage('processing times must be a comma-separated list of positive integers', true);
      return;
    }
    const sid = (await Api.createSession(machines, times, solverSelect.value)).id;
    const doc = await Api.getSession(sid);
    state = newViewState(sid, doc.instance);
    applySession(state, doc);
    selected = null;
    lastAf = null;
    workspace.hidden = false;
    sessionLine.textContent =
      `session ${sid}: ${doc.instance.machines} machines, ` +
      `processing times ${doc.instance.processing_times.join(', ')} (${doc.solver} baseline)`;
    setMessage('');
    renderGridPanel();
    renderReportPanel();
    await refreshGraph();
  }

  async function doSubmit(): Promise<void> {
    const s = state;
    if (s === null) return;
    const report = await Api.propose(s.sessionId, proposalPayload(s));
    const echo = await Api.getSession(s.sessionId);
    applySession(s, echo);
    s.report = report;
    selected = null;
    lastAf = null; // the optimality framework tracks the stored proposal
    setMessage('');
    renderGridPanel();
    renderReportPanel();
    await refreshGraph();
  }

  function onSelect(index: number | null): void {
    enqueue(async () => {
      const s = state;
      if (s === null || s.report === null) return;
      selected = index;
      if (index !== null) {
        const row = s.report.explanations[index];
        if (row !== undefined) s.afKind = DIMENSION_KIND[row.dimension];
      }
      renderReportPanel();
      await refreshGraph();
    });
  }

  createButton.addEventListener('click', () => enqueue(doCreate));
  submitButton.addEventListener('click', () => enqueue(doSubmit));
  kindSelect.addEventListener('change', () => {
    enqueue(async () => {
      if (state === null) return;
      state.afKind = kindSelect.value as AfKind;
      selected = null;
      renderReportPanel();
      await refreshGraph();
    });
  });
  grid.addEventListener('click', (event) => {
    const s = state;
    if (s === null) return;
    const target = event.target instanceof Element ? event.target.closest('button') : null;
    if (target === null) return;
    const spot = target.dataset.cell ?? target.dataset.pin ?? target.dataset.ban;
    if (spot === undefined) return;
    const parts = spot.split(',').map(Number);
    const i = parts[0];
    const j = parts[1];
    if (i === undefined || j === undefined) return;
    if (target.dataset.cell !== undefined) {
      toggleCell(s, i, j);
    } else {
      toggleDecision(s, i, j, target.dataset.pin !== undefined ? 'positive' : 'negative');
    }
    setMessage(s.message, s.message !== '');
    renderGridPanel();
  });

  return {
    whenIdle: () => busy,
    getState: () => state,
  };
}
