/** Framework graph rendering: machines as rows, jobs as columns, every
 * argument a(i,j) at a fixed grid position.  The layout is a pure function
 * of the indices, never force-directed, so renders are deterministic and
 * assertable.
 *
 * Attacks are solid arrows (self-attacks loop beside their node), the
 * extension in question is boxed node by node, and non-attack findings are
 * drawn dashed from the first extension member to the unattacked argument.
 */
import type { AfDoc, ExplanationDoc, Pair } from './types.js';
import { argLabel, comparePairs, pairKey } from './types.js';

const NS = 'http://www.w3.org/2000/svg';

export const LAYOUT = { marginX: 70, marginY: 60, stepX: 130, stepY: 110, radius: 24 };

export function nodePosition(p: Pair): { x: number; y: number } {
  return {
    x: LAYOUT.marginX + (p[1] - 1) * LAYOUT.stepX,
    y: LAYOUT.marginY + (p[0] - 1) * LAYOUT.stepY,
  };
}

export interface GraphOverlay {
  /** Pairs whose arguments get the extension box. */
  extension: Pair[];
  /** Report rows belonging to this framework; attacks highlight their
   * edge, non-attacks add a dashed edge. */
  explanations: ExplanationDoc[];
  /** Row to emphasize on top of the plain highlight, if any. */
  selected?: ExplanationDoc | null;
}

const edgeKey = (from: Pair, to: Pair): string => `${pairKey(from)}>${pairKey(to)}`;

function el<K extends string>(tag: K, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(NS, tag) as SVGElement;
  for (const [name, value] of Object.entries(attrs)) node.setAttribute(name, value);
  return node;
}

function marker(id: string, cls: string): SVGElement {
  const m = el('marker', {
    id,
    class: cls,
    viewBox: '0 0 10 10',
    refX: '9',
    refY: '5',
    markerWidth: '8',
    markerHeight: '8',
    orient: 'auto-start-reverse',
  });
  m.appendChild(el('path', { d: 'M 0 0 L 10 5 L 0 10 z' }));
  return m;
}

function straightEdge(from: Pair, to: Pair, offset: number): string {
  const a = nodePosition(from);
  const b = nodePosition(to);
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len = Math.hypot(dx, dy) || 1;
  const ux = dx / len;
  const uy = dy / len;
  const px = -uy * offset;
  const py = ux * offset;
  const r = LAYOUT.radius;
  const x1 = a.x + ux * (r + 2) + px;
  const y1 = a.y + uy * (r + 2) + py;
  const x2 = b.x - ux * (r + 8) + px;
  const y2 = b.y - uy * (r + 8) + py;
  return `M ${x1} ${y1} L ${x2} ${y2}`;
}

function loopEdge(at: Pair): string {
  const { x, y } = nodePosition(at);
  const r = LAYOUT.radius;
  return `M ${x + r - 4} ${y - 10} C ${x + r + 34} ${y - 28}, ${x + r + 34} ${y + 28}, ${x + r - 2} ${y + 12}`;
}

function curvedEdge(from: Pair, to: Pair): string {
  const a = nodePosition(from);
  const b = nodePosition(to);
  const mx = (a.x + b.x) / 2;
  const my = (a.y + b.y) / 2;
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len = Math.hypot(dx, dy) || 1;
  // bow to the left of travel, away from the straight attack lane
  const cx = mx - (dy / len) * 34;
  const cy = my + (dx / len) * 34;
  const r = LAYOUT.radius;
  const sx = a.x + ((cx - a.x) / (Math.hypot(cx - a.x, cy - a.y) || 1)) * (r + 2);
  const sy = a.y + ((cy - a.y) / (Math.hypot(cx - a.x, cy - a.y) || 1)) * (r + 2);
  const tx = b.x + ((cx - b.x) / (Math.hypot(cx - b.x, cy - b.y) || 1)) * (r + 8);
  const ty = b.y + ((cy - b.y) / (Math.hypot(cx - b.x, cy - b.y) || 1)) * (r + 8);
  return `M ${sx} ${sy} Q ${cx} ${cy} ${tx} ${ty}`;
}

/** Redraw the whole framework graph into `svg`. */
export function renderAfGraph(svg: SVGElement, af: AfDoc, overlay: GraphOverlay): void {
  while (svg.firstChild) svg.removeChild(svg.firstChild);

  let maxMachine = 0;
  let maxJob = 0;
  for (const [i, j] of af.arguments) {
    maxMachine = Math.max(maxMachine, i);
    maxJob = Math.max(maxJob, j);
  }
  const width = LAYOUT.marginX * 2 + Math.max(maxJob - 1, 0) * LAYOUT.stepX + 50;
  const height = LAYOUT.marginY * 2 + Math.max(maxMachine - 1, 0) * LAYOUT.stepY;
  svg.setAttribute('viewBox', `0 0 ${width} ${height}`);
  svg.setAttribute('width', String(width));
  svg.setAttribute('height', String(height));

  const defs = el('defs', {});
  defs.appendChild(marker('arrow-attack', 'arrow-attack'));
  defs.appendChild(marker('arrow-highlight', 'arrow-highlight'));
  defs.appendChild(marker('arrow-hint', 'arrow-hint'));
  svg.appendChild(defs);
  if (af.arguments.length === 0) return;

  const extension = [...overlay.extension].sort(comparePairs);
  const inExtension = new Set(extension.map(pairKey));
  const selected = overlay.selected ?? null;

  const highlighted = new Set<string>();
  let selectedAttackKey: string | null = null;
  for (const x of overlay.explanations) {
    if (x.form === 'attack' && x.attacker !== null) {
      const key = edgeKey(x.attacker, x.target);
      highlighted.add(key);
      if (x === selected) selectedAttackKey = key;
    }
  }

  const boxes = el('g', { class: 'extension-boxes' });
  for (const p of extension) {
    if (!inExtension.has(pairKey(p))) continue;
    const { x, y } = nodePosition(p);
    const pad = LAYOUT.radius + 8;
    boxes.appendChild(el('rect', {
      class: 'extension-box',
      'data-arg': pairKey(p),
      x: String(x - pad),
      y: String(y - pad),
      width: String(pad * 2),
      height: String(pad * 2),
      rx: '6',
    }));
  }
  svg.appendChild(boxes);

  const present = new Set(af.arguments.map(pairKey));
  const reversed = new Set(af.attacks.map(([a, b]) => edgeKey(b, a)));
  const edges = el('g', { class: 'edges' });
  for (const [from, to] of af.attacks) {
    const key = edgeKey(from, to);
    const self = from[0] === to[0] && from[1] === to[1];
    const classes = ['attack'];
    if (self) classes.push('self-attack');
    if (highlighted.has(key)) classes.push('highlight');
    if (key === selectedAttackKey) classes.push('selected');
    const markerId = highlighted.has(key) ? 'arrow-highlight' : 'arrow-attack';
    edges.appendChild(el('path', {
      class: classes.join(' '),
      'data-kind': 'attack',
      'data-from': pairKey(from),
      'data-to': pairKey(to),
      d: self ? loopEdge(from) : straightEdge(from, to, reversed.has(key) && !self ? 6 : 0),
      'marker-end': `url(#${markerId})`,
    }));
  }
  for (const x of overlay.explanations) {
    if (x.form !== 'non_attack') continue;
    if (!present.has(pairKey(x.target))) continue;
    const source = extension[0];
    const classes = ['non-attack'];
    if (x === selected) classes.push('selected');
    if (source === undefined || pairKey(source) === pairKey(x.target)) {
      // nothing to draw the missing attack from; ring the target instead
      const { x: cx, y: cy } = nodePosition(x.target);
      edges.appendChild(el('circle', {
        class: classes.join(' ') + ' non-attack-mark',
        'data-kind': 'non-attack-mark',
        'data-to': pairKey(x.target),
        cx: String(cx),
        cy: String(cy),
        r: String(LAYOUT.radius + 9),
      }));
      continue;
    }
    edges.appendChild(el('path', {
      class: classes.join(' '),
      'data-kind': 'non-attack',
      'data-from': pairKey(source),
      'data-to': pairKey(x.target),
      d: curvedEdge(source, x.target),
      'marker-end': 'url(#arrow-hint)',
    }));
  }
  svg.appendChild(edges);

  const selectedArgs = new Set<string>();
  if (selected !== null) {
    selectedArgs.add(pairKey(selected.target));
    if (selected.attacker !== null) selectedArgs.add(pairKey(selected.attacker));
  }
  const nodes = el('g', { class: 'nodes' });
  for (const p of [...af.arguments].sort(comparePairs)) {
    const { x, y } = nodePosition(p);
    const classes = ['node'];
    if (inExtension.has(pairKey(p))) classes.push('in-extension');
    if (selectedArgs.has(pairKey(p))) classes.push('selected');
    const g = el('g', { class: classes.join(' '), 'data-arg': pairKey(p) });
    g.appendChild(el('circle', { cx: String(x), cy: String(y), r: String(LAYOUT.radius) }));
    const label = el('text', { x: String(x), y: String(y), dy: '4', 'text-anchor': 'middle' });
    label.textContent = argLabel(p);
    g.appendChild(label);
    nodes.appendChild(g);
  }
  svg.appendChild(nodes);
}
