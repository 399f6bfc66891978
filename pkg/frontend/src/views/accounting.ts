/** Accounting calculator: two editable model accounts seeded with the
 * built-in pair, relative-efficiency readout, and per-account logical
 * compute recomputed by the service on every edit. */

import type { ApiClient } from "../api.js";
import { formatRatio, formatSig } from "../format.js";
import { refreshSlot, ResponseSlot } from "../state.js";
import type { AccountWire, EfficiencyResult } from "../types.js";

export const ACCOUNT_FIELDS = [
  "params_n",
  "tokens_d",
  "gpu_hours",
  "equivalence_factor",
] as const;
export type AccountField = (typeof ACCOUNT_FIELDS)[number];

export type AccountErrors = Partial<Record<AccountField, string>>;

export function validateAccountDraft(account: AccountWire): AccountErrors {
  const errors: AccountErrors = {};
  for (const field of ACCOUNT_FIELDS) {
    const value = account[field];
    if (!Number.isFinite(value) || value <= 0) {
      errors[field] = "must be > 0";
    }
  }
  if (!errors.equivalence_factor && account.equivalence_factor > 2) {
    errors.equivalence_factor = "must be within (0, 2]";
  }
  return errors;
}

/** Apply one field edit. Editing parameters or tokens drops the published
 * logical-compute figure so the service recomputes from 6*N*D; hour and
 * conversion edits keep it (they do not change what the model computed). */
export function editAccount(account: AccountWire, field: AccountField, value: number): AccountWire {
  const next: AccountWire = { ...account, [field]: value };
  if (field === "params_n" || field === "tokens_d") {
    next.reported_logical_compute = null;
  }
  return next;
}

export interface AccountingModel {
  ratioText: string;
  subject: { name: string; computeText: string; effectiveText: string | null; hoursText: string };
  baseline: { name: string; computeText: string; effectiveText: string | null; hoursText: string };
}

/** Readout strings from the efficiency response, verbatim. */
export function accountingModel(result: EfficiencyResult): AccountingModel {
  const side = (row: EfficiencyResult["subject"]) => ({
    name: row.name,
    computeText: formatSig(row.logical_compute, 4),
    effectiveText:
      row.effective_logical_compute === row.logical_compute
        ? null
        : formatSig(row.effective_logical_compute, 4),
    hoursText: formatSig(row.reference_gpu_hours, 4),
  });
  return {
    ratioText: formatRatio(result.ratio),
    subject: side(result.subject),
    baseline: side(result.baseline),
  };
}

export function createAccountingView(client: ApiClient, root: HTMLElement): { refresh(): void } {
  const slot = new ResponseSlot<EfficiencyResult>();
  let accounts: { subject: AccountWire; baseline: AccountWire } | null = null;

  root.innerHTML = `
    <div class="readout" data-ref="ratio"></div>
    <div class="account-forms" data-ref="forms"></div>
    <div data-ref="derived"></div>
  `;
  const el = <T extends HTMLElement>(ref: string) =>
    root.querySelector<T>(`[data-ref="${ref}"]`)!;

  const run = () => {
    if (!accounts) return;
    const invalid =
      Object.keys(validateAccountDraft(accounts.subject)).length > 0 ||
      Object.keys(validateAccountDraft(accounts.baseline)).length > 0;
    if (invalid) return;
    refreshSlot(slot, () => client.relativeEfficiency(accounts!));
  };

  const renderForms = () => {
    if (!accounts) return;
    const formsEl = el("forms");
    const form = (role: "subject" | "baseline", account: AccountWire) => {
      const errors = validateAccountDraft(account);
      const fields = ACCOUNT_FIELDS.map((field) => {
        const error = errors[field];
        return (
          `<label class="cell">${field.replace(/_/g, " ")}` +
          `<input type="number" step="any" data-role="${role}" data-field="${field}" ` +
          `value="${account[field]}">` +
          (error ? `<span class="error">${error}</span>` : "") +
          `</label>`
        );
      }).join("");
      return `<fieldset><legend>${account.name} (${role})</legend>${fields}</fieldset>`;
    };
    formsEl.innerHTML = form("subject", accounts.subject) + form("baseline", accounts.baseline);
    formsEl.querySelectorAll<HTMLInputElement>("input[data-role]").forEach((input) => {
      input.addEventListener("change", () => {
        if (!accounts) return;
        const role = input.dataset.role as "subject" | "baseline";
        const field = input.dataset.field as AccountField;
        accounts[role] = editAccount(accounts[role], field, Number(input.value));
        slot.invalidate();
        renderForms();
        run();
      });
    });
  };

  slot.subscribe((state) => {
    if (state.kind === "error") {
      el("ratio").innerHTML = `<span class="error">${state.message}</span>`;
      return;
    }
    const value = slot.lastValue;
    if (!value) return;
    const stale = state.kind !== "ready";
    const model = accountingModel(value);
    el("ratio").className = stale ? "readout stale" : "readout";
    el("ratio").innerHTML =
      `relative efficiency: <strong data-ref="ratio-value">${model.ratioText}</strong>&times; ` +
      `(${model.subject.name} vs ${model.baseline.name})`;
    const derived = (side: AccountingModel["subject"]) =>
      `<tr><td>${side.name}</td><td>${side.computeText} FLOPs` +
      (side.effectiveText ? ` <span class="note">(published: ${side.effectiveText})</span>` : "") +
      `</td><td>${side.hoursText} h</td></tr>`;
    el("derived").className = stale ? "stale" : "";
    el("derived").innerHTML =
      `<table><thead><tr><th>model</th><th>logical compute (6ND)</th>` +
      `<th>reference GPU-hours</th></tr></thead>` +
      `<tbody>${derived(model.subject)}${derived(model.baseline)}</tbody></table>`;
  });

  const refresh = () => {
    client
      .builtinAccounts()
      .then((builtin) => {
        accounts = { subject: builtin.accounts[0], baseline: builtin.accounts[1] };
        renderForms();
        run();
      })
      .catch((error: unknown) => {
        el("forms").innerHTML = `<span class="error">${
          error instanceof Error ? error.message : String(error)
        }</span>`;
      });
  };

  refresh();
  return { refresh };
}
