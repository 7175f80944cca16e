/** Downloadable report exports. */

import { renderReport, escapeHtml } from "./render.js";
import { STYLES } from "./styles.js";
import type { ReportViewModel } from "./viewmodel.js";

/** The JSON export is the API response body, byte for byte. */
export function exportJson(vm: ReportViewModel): string {
  return vm.rawBody;
}

/** Self-contained HTML: inline styles, no scripts, no external resources. */
export function exportHtml(vm: ReportViewModel): string {
  return (
    `<!doctype html>\n<html lang="${escapeHtml(vm.locale)}"><head><meta charset="utf-8">` +
    `<title>FAIR assessment of ${escapeHtml(vm.subject)}</title>` +
    `<style>${STYLES}</style></head><body><main>` +
    renderReport(vm) +
    `</main></body></html>`
  );
}

export function downloadFile(name: string, content: string, mediaType: string): void {
  const blob = new Blob([content], { type: mediaType });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = name;
  anchor.click();
  URL.revokeObjectURL(url);
}
