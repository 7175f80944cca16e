/** Page wiring: submit, pending/error states, exports, locale switch. */

import { apiBaseUrl, submitEvaluation } from "./api.js";
import { downloadFile, exportHtml, exportJson } from "./export.js";
import { renderError, renderPending, renderReport } from "./render.js";
import { STYLES } from "./styles.js";
import { buildViewModel, type ReportViewModel } from "./viewmodel.js";

interface PageState {
  viewModel: ReportViewModel | null;
  inflight: AbortController | null;
}

const state: PageState = { viewModel: null, inflight: null };

function el<T extends HTMLElement>(selector: string): T {
  const node = document.querySelector<T>(selector);
  if (!node) throw new Error(`missing page element: ${selector}`);
  return node;
}

function setExportsEnabled(enabled: boolean): void {
  document
    .querySelectorAll<HTMLButtonElement>(".exports button")
    .forEach((button) => (button.disabled = !enabled));
}

async function runEvaluation(identifier: string, plugin: string, locale: string): Promise<void> {
  const output = el<HTMLElement>("#report");
  // a new submission cancels the pending one: at most one evaluation in flight
  state.inflight?.abort();
  const controller = new AbortController();
  state.inflight = controller;
  state.viewModel = null;
  setExportsEnabled(false);
  output.innerHTML = renderPending(identifier);
  try {
    const result = await submitEvaluation(apiBaseUrl(), identifier, plugin, locale, controller.signal);
    if (controller.signal.aborted) return;
    if (result.status !== 200) {
      output.innerHTML = renderError(result.status);
      return;
    }
    const viewModel = buildViewModel(result.rawBody);
    state.viewModel = viewModel;
    output.innerHTML = renderReport(viewModel);
    setExportsEnabled(true);
  } catch (error) {
    if (controller.signal.aborted) return;
    output.innerHTML = renderError(0);
  } finally {
    if (state.inflight === controller) state.inflight = null;
  }
}

function submitFromForm(): void {
  const identifier = el<HTMLInputElement>("#identifier").value.trim();
  const plugin = el<HTMLInputElement>("#plugin").value.trim();
  const locale = el<HTMLSelectElement>("#locale").value;
  const validation = el<HTMLElement>("#validation");
  if (!identifier) {
    validation.textContent = "Enter the identifier (DOI or Handle) of the digital object.";
    return;
  }
  validation.textContent = "";
  void runEvaluation(identifier, plugin || "institutional", locale);
}

export function initPage(): void {
  const style = document.createElement("style");
  style.textContent = STYLES;
  document.head.appendChild(style);

  el<HTMLFormElement>("#eval-form").addEventListener("submit", (event) => {
    event.preventDefault();
    submitFromForm();
  });

  // switching locale re-requests with the new language
  el<HTMLSelectElement>("#locale").addEventListener("change", () => {
    if (state.viewModel) submitFromForm();
  });

  el<HTMLElement>("#report").addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.dataset.action === "retry") submitFromForm();
  });

  el<HTMLButtonElement>("#export-json").addEventListener("click", () => {
    if (state.viewModel) {
      downloadFile("assessment.json", exportJson(state.viewModel), "application/json");
    }
  });
  el<HTMLButtonElement>("#export-html").addEventListener("click", () => {
    if (state.viewModel) {
      downloadFile("assessment.html", exportHtml(state.viewModel), "text/html");
    }
  });

  setExportsEnabled(false);
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  initPage();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", initPage);
}
