// UI state and pure transition functions.
//
// The state machine enforces the client-side rules: sliders clamp to 1..5,
// days must be a positive integer before submit, only one request is in
// flight at a time, and responses for superseded requests are discarded
// by sequence number.

import type {
  CompareResponse,
  DestinationGuess,
  Genre,
  PlanRecord,
  PlanRequest,
  SliderValues,
} from './types.js';

export interface UiState {
  destination: string;
  guess: DestinationGuess | null;
  days: number;
  sliders: SliderValues;
  plan: PlanRecord | null;
  comparison: CompareResponse | null;
  banner: string | null;
  requestSeq: number;
  inFlight: boolean;
}

export function initialState(): UiState {
  return {
    destination: '',
    guess: null,
    days: 2,
    sliders: { historical: 3, amusement: 3, natural: 3, cultural: 3 },
    plan: null,
    comparison: null,
    banner: null,
    requestSeq: 0,
    inFlight: false,
  };
}

export function clampSlider(value: number): number {
  if (!Number.isFinite(value)) return 3;
  return Math.min(5, Math.max(1, Math.round(value)));
}

export function setSlider(state: UiState, genre: Genre, value: number): UiState {
  return { ...state, sliders: { ...state.sliders, [genre]: clampSlider(value) } };
}

export function setDays(state: UiState, value: number): UiState {
  return { ...state, days: value };
}

export function setDestination(state: UiState, destination: string): UiState {
  return { ...state, destination };
}

export function applyGuess(state: UiState, guess: DestinationGuess): UiState {
  return { ...state, guess };
}

/** The user accepts (or overrides) the inferred destination. */
export function confirmGuess(state: UiState, override?: string): UiState {
  const destination = override ?? state.guess?.destination ?? state.destination;
  return { ...state, destination };
}

export function daysError(state: UiState): string | null {
  if (!Number.isInteger(state.days) || state.days < 1) {
    return 'Days must be a whole number of at least 1.';
  }
  return null;
}

export function canSubmit(state: UiState): boolean {
  return (
    !state.inFlight &&
    state.destination.trim().length > 0 &&
    daysError(state) === null
  );
}

export function buildPlanRequest(state: UiState): PlanRequest {
  // Slider values go over the wire exactly as displayed.
  return {
    destination: state.destination.trim(),
    days: state.days,
    preferences: { ...state.sliders },
  };
}

export function beginRequest(state: UiState): { state: UiState; seq: number } {
  const seq = state.requestSeq + 1;
  return { state: { ...state, requestSeq: seq, inFlight: true, banner: null }, seq };
}

function isStale(state: UiState, seq: number): boolean {
  return seq !== state.requestSeq;
}

export function applyPlan(state: UiState, seq: number, plan: PlanRecord): UiState {
  if (isStale(state, seq)) return state;
  return { ...state, plan, comparison: null, inFlight: false, banner: null };
}

export function applyComparison(state: UiState, seq: number, comparison: CompareResponse): UiState {
  if (isStale(state, seq)) return state;
  return { ...state, comparison, inFlight: false, banner: null };
}

export function applyError(state: UiState, seq: number, message: string): UiState {
  if (isStale(state, seq)) return state;
  return { ...state, inFlight: false, banner: message };
}
