/**
 * Pure projection of one API report into what the page shows.
 *
 * No arithmetic happens here or anywhere in the UI: every number comes
 * verbatim from the response, and the raw body is kept for the
 * byte-identical JSON export.
 */

import type { EvaluationReport, IndicatorBlock } from "./types.js";

export const GROUP_ORDER = ["F", "A", "I", "R"] as const;

export const GROUP_LABELS: Record<string, string> = {
  F: "Findable",
  A: "Accessible",
  I: "Interoperable",
  R: "Reusable",
};

export interface IndicatorRow {
  id: string;
  name: string;
  group: string;
  level: string; // "Indicator Level" badge
  assessment: string; // "Indicator Assessment"
  implementation: string; // "Technical Implementation"
  feedback: string; // "Technical feedback"
  tips: string; // "Tips" ("" means nothing to improve)
  dependency: string; // repository- vs metadata-dependent badge
  points: number;
  weight: number;
}

export interface GroupView {
  group: string;
  label: string;
  score: number;
  rows: IndicatorRow[];
}

export interface ReportViewModel {
  subject: string;
  identifierShown: string;
  plugin: string;
  locale: string;
  totalScore: number;
  groups: GroupView[];
  rawBody: string;
}

function toRow(block: IndicatorBlock): IndicatorRow {
  return {
    id: block.indicator,
    name: block.name,
    group: block.group,
    level: block.level,
    assessment: block.assessment,
    implementation: block.technical_implementation,
    feedback: block.technical_feedback,
    tips: block.tips,
    dependency: block.dependency,
    points: block.points,
    weight: block.weight,
  };
}

export function buildViewModel(rawBody: string): ReportViewModel {
  const report = JSON.parse(rawBody) as EvaluationReport;
  if (!Array.isArray(report.indicators) || typeof report.total_score !== "number") {
    throw new Error("malformed assessment report");
  }
  const groups: GroupView[] = GROUP_ORDER.map((group) => {
    const score = report.group_scores[group];
    if (typeof score !== "number") {
      throw new Error(`report lacks a score for group ${group}`);
    }
    return {
      group,
      label: GROUP_LABELS[group],
      score,
      rows: report.indicators.filter((block) => block.group === group).map(toRow),
    };
  });
  const placed = groups.reduce((count, view) => count + view.rows.length, 0);
  if (placed !== report.indicators.length) {
    throw new Error("some indicators belong to no known principle group");
  }
  return {
    subject: report.subject.normalized,
    identifierShown: report.subject.raw,
    plugin: report.plugin,
    locale: report.locale,
    totalScore: report.total_score,
    groups,
    rawBody,
  };
}
