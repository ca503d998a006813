/** Report panel rendering.  Every sentence is shown exactly as the server
 * sent it; this module only arranges, never rewrites. */
import type { ReportDoc } from './types.js';
import { DIMENSION_KIND } from './types.js';

export interface ReportHooks {
  /** Called with the row index, or null when the selection is cleared. */
  onSelect: (index: number | null) => void;
}

export function allGood(report: ReportDoc): boolean {
  return report.feasible && report.efficient && report.fixed_ok !== false;
}

function flagChip(name: string, value: boolean | undefined): HTMLElement {
  const chip = document.createElement('span');
  chip.className = 'flag ' + (value === undefined ? 'off' : value ? 'ok' : 'bad');
  chip.dataset.flag = name;
  chip.textContent = `${name}: ${value === undefined ? 'n/a' : value ? 'yes' : 'no'}`;
  return chip;
}

export function renderReport(
  root: HTMLElement,
  report: ReportDoc | null,
  selected: number | null,
  hooks: ReportHooks,
): void {
  root.textContent = '';
  if (report === null) {
    const empty = document.createElement('p');
    empty.className = 'empty';
    empty.textContent = 'No proposal evaluated yet.';
    root.appendChild(empty);
    return;
  }

  const flags = document.createElement('div');
  flags.className = 'flags';
  flags.appendChild(flagChip('feasible', report.feasible));
  flags.appendChild(flagChip('efficient', report.efficient));
  flags.appendChild(flagChip('fixed', report.fixed_ok));
  root.appendChild(flags);

  if (allGood(report)) {
    const banner = document.createElement('div');
    banner.className = 'banner';
    banner.textContent = 'All checks passed.';
    root.appendChild(banner);
  }

  if (report.certificates.length > 0) {
    const certs = document.createElement('div');
    certs.className = 'certificates';
    for (const c of report.certificates) {
      const p = document.createElement('p');
      p.className = 'certificate';
      p.dataset.kind = c.kind;
      p.textContent = c.text;
      certs.appendChild(p);
    }
    root.appendChild(certs);
  }

  if (report.explanations.length > 0) {
    const list = document.createElement('ol');
    list.className = 'findings';
    report.explanations.forEach((x, index) => {
      // server order is kept as-is; it already leads with feasibility
      const row = document.createElement('li');
      row.className = 'row' + (index === selected ? ' selected' : '');
      row.dataset.index = String(index);
      row.dataset.dimension = x.dimension;
      row.dataset.kind = DIMENSION_KIND[x.dimension];
      row.textContent = x.text;
      row.addEventListener('click', () => {
        hooks.onSelect(index === selected ? null : index);
      });
      list.appendChild(row);
    });
    root.appendChild(list);
  }
}
