/**
 * Widget orchestration: the four visualizations plus the posts table
 * load concurrently and independently. A failing endpoint only marks
 * its own widget; responses from superseded searches are dropped.
 */

import { ApiClient, GatewayError, WidgetName, WidgetPayloads } from "./api.js";
import { SearchSequencer, WidgetPhase, loading } from "./state.js";

export const WIDGET_NAMES: readonly WidgetName[] = [
  "summary",
  "timeline",
  "tagcloud",
  "map",
  "posts",
];

export type DashboardState = {
  [W in WidgetName]: WidgetPhase<WidgetPayloads[W]>;
};

export function initialState(): DashboardState {
  return {
    summary: loading(),
    timeline: loading(),
    tagcloud: loading(),
    map: loading(),
    posts: loading(),
  };
}

export type UpdateCallback = (widget: WidgetName, state: DashboardState) => void;

export async function loadDashboard(
  client: ApiClient,
  query: string,
  sequencer: SearchSequencer,
  onUpdate: UpdateCallback = () => {},
): Promise<DashboardState> {
  const sequence = sequencer.next();
  const state = initialState();

  const settle = <W extends WidgetName>(widget: W, phase: DashboardState[W]) => {
    if (!sequencer.isCurrent(sequence)) return; // stale search: drop it
    state[widget] = phase;
    onUpdate(widget, state);
  };

  await Promise.all(
    WIDGET_NAMES.map(async (widget) => {
      try {
        const payload = await client.widget(widget, query);
        settle(widget, { phase: "loaded", payload } as DashboardState[typeof widget]);
      } catch (error) {
        if (error instanceof GatewayError) {
          settle(widget, {
            phase: "error",
            status: error.status,
            code: error.code,
            message: error.message,
            retryAfter: error.retryAfter,
          });
        } else {
          settle(widget, {
            phase: "error",
            status: 0,
            code: "network_error",
            message: String(error),
          });
        }
      }
    }),
  );
  return state;
}

export function loadedCount(state: DashboardState): number {
  return WIDGET_NAMES.filter((w) => state[w].phase === "loaded").length;
}
