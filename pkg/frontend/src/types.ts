/** JSON document shapes exchanged with the what-if service. */

/** [machine, job], both 1-based. */
export type Pair = [number, number];

export type AfKind = 'feasibility' | 'optimality' | 'fixed';
export type Dimension = 'feasibility' | 'efficiency' | 'fixed';

export interface InstanceDoc {
  machines: number;
  processing_times: number[];
}

export interface ScheduleDoc {
  assignments: Pair[];
}

export interface DecisionsDoc {
  negative: Pair[];
  positive: Pair[];
}

export interface ExplanationDoc {
  dimension: Dimension;
  form: 'attack' | 'non_attack';
  attacker: Pair | null;
  target: Pair;
  detail: Record<string, number>;
  text: string;
}

export interface CertificateDoc {
  kind: AfKind;
  extension: Pair[];
  text: string;
  satisfied_negative?: Pair[];
  satisfied_positive?: Pair[];
}

export interface ReportDoc {
  feasible: boolean;
  efficient: boolean;
  fixed_ok?: boolean;
  explanations: ExplanationDoc[];
  certificates: CertificateDoc[];
}

export interface AfDoc {
  kind: AfKind;
  arguments: Pair[];
  attacks: [Pair, Pair][];
}

export interface HistoryEntryDoc {
  at: string;
  event: string;
  summary: Record<string, unknown>;
}

export interface SessionDoc {
  id: string;
  solver: string;
  instance: InstanceDoc;
  baseline: ScheduleDoc;
  proposal: ScheduleDoc | null;
  decisions: DecisionsDoc | null;
  history: HistoryEntryDoc[];
}

/** The framework each report dimension is judged in. */
export const DIMENSION_KIND: Record<Dimension, AfKind> = {
  feasibility: 'feasibility',
  efficiency: 'optimality',
  fixed: 'fixed',
};

export const argLabel = (p: Pair): string => `a(${p[0]},${p[1]})`;

export const pairKey = (p: Pair): string => `${p[0]},${p[1]}`;

export function comparePairs(a: Pair, b: Pair): number {
  return a[0] - b[0] || a[1] - b[1];
}
