/** Thin fetch wrapper around the assessment API. */

export interface ApiResult {
  status: number;
  rawBody: string;
}

export function apiBaseUrl(): string {
  const meta = document.querySelector<HTMLMetaElement>('meta[name="fairmeter-api-base"]');
  return (meta?.content ?? "").replace(/\/$/, "");
}

export async function submitEvaluation(
  baseUrl: string,
  identifier: string,
  plugin: string,
  locale: string,
  signal?: AbortSignal,
): Promise<ApiResult> {
  const response = await fetch(`${baseUrl}/v1.0/rda/rda_all`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({ id: identifier, repo: plugin, lang: locale }),
    signal,
  });
  // keep the body as received: the JSON export must be byte-identical
  const rawBody = await response.text();
  return { status: response.status, rawBody };
}
