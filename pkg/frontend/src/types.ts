/** Wire types mirroring the assessment API's JSON report. */

export interface EvidenceItem {
  name: string;
  value: string;
}

export interface IndicatorBlock {
  indicator: string;
  name: string;
  group: string;
  level: string;
  weight: number;
  points: number;
  assessment: string;
  technical_implementation: string;
  technical_feedback: string;
  tips: string;
  dependency: string;
  evidence: EvidenceItem[];
}

export interface SubjectInfo {
  raw: string;
  kind: string;
  normalized: string;
  resolver_url: string | null;
}

export interface EvaluationReport {
  subject: SubjectInfo;
  plugin: string;
  locale: string;
  total_score: number;
  group_scores: Record<string, number>;
  indicators: IndicatorBlock[];
  started_at: string;
  finished_at: string;
}
