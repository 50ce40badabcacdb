/** Page wiring: token entry, search form, dashboard and table views. */

import {
  ApiClient,
  GatewayError,
  PostRecord,
  WidgetName,
  sessionToken,
  storeSessionToken,
} from "./api.js";
import { renderLine, renderPie, renderTagCloud, renderTileMap } from "./charts.js";
import { DashboardState, loadDashboard } from "./dashboard.js";
import { SearchForm, SearchSequencer, canSubmit, emptyForm, toQueryString } from "./state.js";
import {
  PAGE_SIZE,
  SortSpec,
  csvObjectUrl,
  fetchCsvBytes,
  pageCount,
  paginate,
  renderRows,
  sortPosts,
} from "./table.js";

interface PageState {
  client: ApiClient | null;
  form: SearchForm;
  query: string;
  posts: PostRecord[];
  sort: SortSpec;
  page: number;
  csvUrl: string | null;
}

const state: PageState = {
  client: null,
  form: emptyForm(),
  query: "",
  posts: [],
  sort: { column: "time", descending: true },
  page: 0,
  csvUrl: null,
};

const sequencer = new SearchSequencer();

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function renderWidget(widget: WidgetName, dashboard: DashboardState): void {
  const container = el<HTMLElement>(`widget-${widget}`);
  const slot = dashboard[widget];
  if (slot.phase === "loading") {
    container.innerHTML = `<p class="loading" role="status">loading…</p>`;
    return;
  }
  if (slot.phase === "error") {
    const retryNote =
      slot.status === 429 && slot.retryAfter
        ? `<p class="retry-after">rate limited; retry in <span class="countdown">${slot.retryAfter}</span>s</p>`
        : "";
    container.innerHTML =
      `<p class="widget-error" role="alert">${slot.code}: ${slot.message}</p>` +
      retryNote +
      `<button type="button" class="retry" data-widget="${widget}">retry</button>`;
    container
      .querySelector("button.retry")
      ?.addEventListener("click", () => runSearch(state.query));
    return;
  }
  switch (widget) {
    case "summary":
      container.innerHTML = renderPie(slot.payload as never);
      break;
    case "timeline":
      container.innerHTML = renderLine(slot.payload as never);
      break;
    case "tagcloud":
      container.innerHTML = renderTagCloud(slot.payload as never);
      break;
    case "map":
      container.innerHTML = renderTileMap(slot.payload as never);
      break;
    case "posts":
      state.posts = (slot.payload as { posts: PostRecord[] }).posts;
      state.page = 0;
      renderTable();
      break;
  }
}

function renderTable(): void {
  const sorted = sortPosts(state.posts, state.sort);
  const rows = paginate(sorted, state.page);
  el<HTMLTableSectionElement>("table-body").innerHTML = renderRows(rows);
  el<HTMLElement>("page-info").textContent =
    `page ${state.page + 1} / ${pageCount(sorted.length)} · ${sorted.length} posts`;
}

async function prepareDownload(): Promise<void> {
  const button = el<HTMLButtonElement>("download-csv");
  const link = el<HTMLAnchorElement>("download-link");
  if (!state.client) return;
  button.disabled = true;
  try {
    // served bytes must equal the export endpoint response exactly
    const bytes = await fetchCsvBytes(state.client, state.query);
    if (state.csvUrl) URL.revokeObjectURL(state.csvUrl);
    state.csvUrl = csvObjectUrl(bytes);
    link.href = state.csvUrl;
    link.download = "sentiboard-export.csv";
    link.hidden = false;
    link.click();
  } catch (error) {
    if (error instanceof GatewayError && error.status === 403) {
      el<HTMLElement>("download-note").textContent =
        "download needs a token with the export scope";
    } else {
      el<HTMLElement>("download-note").textContent = `download failed: ${error}`;
    }
  } finally {
    button.disabled = false;
  }
}

async function runSearch(query: string): Promise<void> {
  if (!state.client) return;
  state.query = query;
  el<HTMLElement>("dashboard").hidden = false;
  await loadDashboard(state.client, query, sequencer, renderWidget);
}

function wireForm(): void {
  const termInput = el<HTMLInputElement>("term-input");
  const submit = el<HTMLButtonElement>("search-button");
  const sync = () => {
    state.form.termText = termInput.value;
    state.form.termKind = el<HTMLSelectElement>("term-kind").value as SearchForm["termKind"];
    state.form.algorithm = el<HTMLSelectElement>("algorithm").value;
    state.form.language = el<HTMLInputElement>("lang").value;
    state.form.timeFrom = el<HTMLInputElement>("time-from").value;
    state.form.timeTo = el<HTMLInputElement>("time-to").value;
    state.form.origin = el<HTMLInputElement>("origin").value;
    state.form.maxResults = Number(el<HTMLInputElement>("max-results").value) || 100;
    submit.disabled = !canSubmit(state.form);
  };
  for (const id of ["term-input", "term-kind", "algorithm", "lang",
                    "time-from", "time-to", "origin", "max-results"]) {
    el(id).addEventListener("input", sync);
  }
  el<HTMLFormElement>("search-form").addEventListener("submit", (event) => {
    event.preventDefault();
    sync();
    if (canSubmit(state.form)) void runSearch(toQueryString(state.form));
  });
  sync();
}

async function populateAlgorithms(): Promise<void> {
  if (!state.client) return;
  try {
    const algorithms = await state.client.algorithms();
    el<HTMLSelectElement>("algorithm").innerHTML = algorithms
      .map((a) => `<option value="${a.id}">${a.id}</option>`)
      .join("");
  } catch {
    /* default option list stays usable if the call fails */
  }
}

function wireToken(): void {
  const existing = sessionToken();
  if (existing) {
    state.client = new ApiClient("", existing);
    el<HTMLElement>("token-panel").hidden = true;
    void populateAlgorithms();
    return;
  }
  el<HTMLFormElement>("token-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const token = el<HTMLInputElement>("token-input").value.trim();
    if (!token) return;
    storeSessionToken(token);
    state.client = new ApiClient("", token);
    el<HTMLElement>("token-panel").hidden = true;
    void populateAlgorithms();
  });
}

function wireTable(): void {
  el("download-csv").addEventListener("click", () => void prepareDownload());
  el("prev-page").addEventListener("click", () => {
    state.page = Math.max(0, state.page - 1);
    renderTable();
  });
  el("next-page").addEventListener("click", () => {
    state.page = Math.min(pageCount(state.posts.length) - 1, state.page + 1);
    renderTable();
  });
  for (const header of document.querySelectorAll<HTMLElement>("th[data-sort]")) {
    header.addEventListener("click", () => {
      const column = header.dataset.sort as SortSpec["column"];
      state.sort = {
        column,
        descending: state.sort.column === column ? !state.sort.descending : true,
      };
      state.page = 0;
      renderTable();
    });
  }
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", () => {
    wireToken();
    wireForm();
    wireTable();
  });
}

export { PAGE_SIZE };
