/** Wire types for the /v1 JSON API. */

export interface Envelope<T> {
  schema_version: string;
  result?: T;
  error?: { code: string; message: string };
}

export interface TrajectoryPoint {
  t_years: number;
  relative_loss: number;
  loss: number;
  underflow: boolean;
}

export interface EvaluateRequest {
  kappa: number;
  gamma: number;
  l0?: number;
  t: number[];
}

export interface EvaluateResult {
  config: { kappa: number; gamma: number; l0: number };
  points: TrajectoryPoint[];
}

export interface SolveRequest {
  kappa: number;
  gamma: number;
  target: number;
  tau?: number;
  tau_grid?: number[];
  l0?: number;
}

export interface SolveResult {
  time_to_target_years: number;
  branch: "exponential" | "static";
  residual: number;
  target: number;
  tau: number | null;
  sensitivity_slope: number | null;
  slope_approximation: number | null;
  perturbed: { tau: number; time_to_target_years: number }[] | null;
}

export interface PaperReported {
  l0: number;
  relative_loss: number;
  time_years: number;
}

export interface ScenarioWire {
  name: string;
  initial_fleet: number;
  baseline_fleet: number;
  gamma: number;
  kappa: number;
  l_init: number;
  target_loss: number;
  paper_reported?: PaperReported | null;
}

export interface PresetEntry {
  key: string;
  scenario: ScenarioWire;
  paper_reported: PaperReported | null;
}

export interface CompareRequest {
  scenarios: ScenarioWire[];
  target?: number | null;
  paper_values?: boolean;
}

export interface CompareRow {
  name: string;
  initial_fleet: number;
  baseline_fleet: number;
  gamma: number;
  kappa: number;
  l0: number;
  required_ratio: number;
  target_loss: number;
  time_to_target_years: number;
  target_met_in_first_year: boolean;
  fleet_requirement: number | null;
  paper_values_used: boolean;
  paper_reported: PaperReported | null;
  trajectory: { points: TrajectoryPoint[] };
}

export interface CompareResult {
  rows: CompareRow[];
}

export interface AccountWire {
  name: string;
  params_n: number;
  tokens_d: number;
  gpu_hours: number;
  equivalence_factor: number;
  per_gpu_power?: number | null;
  reported_logical_compute?: number | null;
}

export interface AccountRow {
  name: string;
  params_n: number;
  tokens_d: number;
  logical_compute: number;
  effective_logical_compute: number;
  reference_gpu_hours: number;
}

export interface EfficiencyRequest {
  subject: AccountWire;
  baseline: AccountWire;
}

export interface EfficiencyResult {
  ratio: number;
  subject: AccountRow;
  baseline: AccountRow;
}

export interface BuiltinAccountsResult {
  accounts: AccountWire[];
  ratio: number;
  subject: AccountRow;
  baseline: AccountRow;
}
