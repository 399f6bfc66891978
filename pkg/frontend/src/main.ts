/** Shell: tab navigation, service health banner with retry, lazy view
 * mounting. The service base URL defaults to same-origin and can be
 * overridden with ?api=http://host:port for static-file serving. */

import { createClient } from "./api.js";
import { createAccountingView } from "./views/accounting.js";
import { createCurvesView } from "./views/curves.js";
import { createRaceView } from "./views/race.js";
import { createSensitivityView } from "./views/sensitivity.js";

type ViewName = "curves" | "race" | "sensitivity" | "accounting";

const VIEWS: { name: ViewName; title: string }[] = [
  { name: "curves", title: "Curve explorer" },
  { name: "race", title: "Scenario race" },
  { name: "sensitivity", title: "Sensitivity" },
  { name: "accounting", title: "Accounting" },
];

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  return override ?? "";
}

export function mountApp(root: HTMLElement): void {
  const client = createClient(apiBase());
  const mounted = new Map<ViewName, { refresh(): void }>();
  let selected: ViewName = "curves";

  root.innerHTML = `
    <header>
      <h1>scaling horizon explorer</h1>
      <nav data-ref="tabs">${VIEWS.map(
        (v) => `<button data-view="${v.name}">${v.title}</button>`,
      ).join("")}</nav>
    </header>
    <div class="banner hidden" data-ref="banner">
      service unreachable &mdash; numbers may be stale
      <button data-ref="retry">retry</button>
    </div>
    ${VIEWS.map((v) => `<section class="view hidden" data-panel="${v.name}"></section>`).join("")}
  `;

  const banner = root.querySelector<HTMLElement>('[data-ref="banner"]')!;
  const factories: Record<ViewName, (el: HTMLElement) => { refresh(): void }> = {
    curves: (el) => createCurvesView(client, el),
    race: (el) => createRaceView(client, el),
    sensitivity: (el) => createSensitivityView(client, el),
    accounting: (el) => createAccountingView(client, el),
  };

  const select = (name: ViewName) => {
    selected = name;
    for (const view of VIEWS) {
      const panel = root.querySelector<HTMLElement>(`[data-panel="${view.name}"]`)!;
      const tab = root.querySelector<HTMLElement>(`[data-view="${view.name}"]`)!;
      const active = view.name === name;
      panel.classList.toggle("hidden", !active);
      tab.classList.toggle("active", active);
      if (active && !mounted.has(view.name)) {
        mounted.set(view.name, factories[view.name](panel));
      }
    }
  };

  root.querySelector('[data-ref="tabs"]')!.addEventListener("click", (event) => {
    const view = (event.target as HTMLElement).dataset.view as ViewName | undefined;
    if (view) select(view);
  });

  const checkHealth = async () => {
    const healthy = await client.health();
    banner.classList.toggle("hidden", healthy);
    return healthy;
  };

  root.querySelector('[data-ref="retry"]')!.addEventListener("click", async () => {
    if (await checkHealth()) {
      client.clearCache();
      mounted.get(selected)?.refresh();
    }
  });

  checkHealth();
  select("curves");
}

const rootEl = document.getElementById("app");
if (rootEl) {
  mountApp(rootEl);
}
