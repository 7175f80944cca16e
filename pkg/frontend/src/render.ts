/**
 * HTML renderers: pure string producers so they can be tested without a DOM.
 *
 * Scores are displayed rounded to two decimals; the underlying values stay
 * untouched in the view model.
 */

import type { GroupView, IndicatorRow, ReportViewModel } from "./viewmodel.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function formatScore(value: number): string {
  return value.toFixed(2);
}

/** Escape, then turn bare http(s) URLs into links (used for Tips). */
export function linkify(text: string): string {
  return escapeHtml(text).replace(
    /https?:\/\/[^\s<)]+/g,
    (url) => `<a href="${url}" target="_blank" rel="noopener">${url}</a>`,
  );
}

const DEPENDENCY_LABELS: Record<string, string> = {
  repository: "repository-dependent",
  metadata: "metadata-dependent",
};

/** Presentation-only threshold for coloring the points badge. */
export const PASS_THRESHOLD = 75;

export function renderGauge(totalScore: number): string {
  const shown = formatScore(totalScore);
  return (
    `<div class="gauge" role="meter" aria-label="total score" aria-valuemin="0" ` +
    `aria-valuemax="100" aria-valuenow="${shown}" style="--value:${shown}">` +
    `<span class="gauge-value">${shown}&nbsp;%</span>` +
    `<span class="gauge-caption">overall FAIR score</span></div>`
  );
}

export function renderGroupBars(groups: GroupView[]): string {
  const bars = groups
    .map((view) => {
      const shown = formatScore(view.score);
      return (
        `<div class="group-bar" data-group="${view.group}">` +
        `<span class="group-label">${escapeHtml(view.label)}</span>` +
        `<span class="group-score">${shown}&nbsp;%</span>` +
        `<div class="bar"><span style="width:${shown}%"></span></div></div>`
      );
    })
    .join("");
  return `<div class="group-bars">${bars}</div>`;
}

export function renderIndicatorRow(row: IndicatorRow): string {
  const tips = row.tips
    ? linkify(row.tips)
    : `<em class="nothing-to-improve">Nothing to improve for this indicator.</em>`;
  const dependency = DEPENDENCY_LABELS[row.dependency] ?? row.dependency;
  return (
    `<details class="indicator-row" data-indicator="${escapeHtml(row.id)}">` +
    `<summary><span class="indicator-id">${escapeHtml(row.id)}</span>` +
    `<span class="indicator-name">${escapeHtml(row.name)}</span>` +
    `<span class="badge level">${escapeHtml(row.level)}</span>` +
    `<span class="badge dependency">${escapeHtml(dependency)}</span>` +
    `<span class="badge points ${row.points >= PASS_THRESHOLD ? "pass" : "improve"}">` +
    `${formatScore(row.points)}&nbsp;%</span></summary>` +
    `<dl class="indicator-fields">` +
    `<dt>Indicator Level</dt><dd>${escapeHtml(row.level)}</dd>` +
    `<dt>Indicator Assessment</dt><dd>${escapeHtml(row.assessment)}</dd>` +
    `<dt>Technical Implementation</dt><dd>${escapeHtml(row.implementation)}</dd>` +
    `<dt>Technical feedback</dt><dd>${escapeHtml(row.feedback)}</dd>` +
    `<dt>Tips</dt><dd>${tips}</dd>` +
    `</dl></details>`
  );
}

export function renderReport(vm: ReportViewModel): string {
  const sections = vm.groups
    .map(
      (view) =>
        `<section class="group-section" data-group="${view.group}">` +
        `<h2>${escapeHtml(view.label)}</h2>` +
        view.rows.map(renderIndicatorRow).join("") +
        `</section>`,
    )
    .join("");
  return (
    `<header class="report-header">` +
    `<p class="report-subject">Assessment of <strong>${escapeHtml(vm.subject)}</strong>` +
    ` via plugin <code>${escapeHtml(vm.plugin)}</code></p>` +
    renderGauge(vm.totalScore) +
    renderGroupBars(vm.groups) +
    `</header>` +
    sections
  );
}

export function errorMessage(status: number): string {
  switch (status) {
    case 400:
      return "The request was rejected: check that the identifier is not empty and the form is complete.";
    case 404:
      return "Unknown repository plugin or indicator: pick one of the configured plugins.";
    case 502:
      return "The object's metadata could not be harvested: the repository may be unreachable or the identifier unknown. Try again in a moment.";
    default:
      return "The evaluation service failed unexpectedly. Try again later.";
  }
}

export function renderError(status: number): string {
  const retry =
    status === 502 ? `<button type="button" class="retry" data-action="retry">Retry</button>` : "";
  return `<div class="error" data-status="${status}"><p>${escapeHtml(errorMessage(status))}</p>${retry}</div>`;
}

export function renderPending(identifier: string): string {
  return `<div class="pending">Evaluating <strong>${escapeHtml(identifier)}</strong>&hellip;</div>`;
}
