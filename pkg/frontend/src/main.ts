// Shared entry for the web page and the extension popup: wires the form,
// tab capture, plan rendering, and the comparison view to the service API.

import { ApiClient, ApiError } from './api.js';
import { getServiceOrigin } from './options.js';
import {
  renderBanner,
  renderComparison,
  renderDayCards,
  renderGuess,
} from './render.js';
import {
  applyComparison,
  applyError,
  applyGuess,
  applyPlan,
  beginRequest,
  buildPlanRequest,
  canSubmit,
  clampSlider,
  confirmGuess,
  daysError,
  initialState,
  setDays,
  setDestination,
  setSlider,
  UiState,
} from './state.js';
import { captureTabs, parseManualTabs } from './tabs.js';
import { GENRES, Genre } from './types.js';

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function boot(): Promise<void> {
  const origin = await getServiceOrigin();
  const api = new ApiClient(origin);
  let state: UiState = initialState();

  const destinationInput = el<HTMLInputElement>('destination');
  const daysInput = el<HTMLInputElement>('days');
  const daysHint = el<HTMLElement>('days-hint');
  const guessBox = el<HTMLElement>('guess');
  const banner = el<HTMLElement>('banner');
  const planBox = el<HTMLElement>('plan');
  const compareBox = el<HTMLElement>('comparison');
  const submitButton = el<HTMLButtonElement>('submit');
  const compareButton = el<HTMLButtonElement>('compare');
  const captureButton = el<HTMLButtonElement>('capture-tabs');
  const manualTabs = el<HTMLTextAreaElement>('manual-tabs');

  const sliderInputs = new Map<Genre, HTMLInputElement>();
  for (const genre of GENRES) {
    sliderInputs.set(genre, el<HTMLInputElement>(`slider-${genre}`));
  }

  function sync(): void {
    destinationInput.value = state.destination;
    for (const genre of GENRES) {
      const input = sliderInputs.get(genre)!;
      input.value = String(state.sliders[genre]);
      el(`slider-${genre}-value`).textContent = String(state.sliders[genre]);
    }
    daysHint.textContent = daysError(state) ?? '';
    guessBox.innerHTML = state.guess ? renderGuess(state.guess) : '';
    banner.innerHTML = state.banner ? renderBanner(state.banner) : '';
    planBox.innerHTML = state.plan ? renderDayCards(state.plan) : '';
    compareBox.innerHTML = state.comparison ? renderComparison(state.comparison) : '';
    submitButton.disabled = !canSubmit(state);
    compareButton.disabled = state.plan === null || state.inFlight;
  }

  destinationInput.addEventListener('input', () => {
    state = setDestination(state, destinationInput.value);
    sync();
  });
  daysInput.addEventListener('input', () => {
    state = setDays(state, Number(daysInput.value));
    sync();
  });
  for (const genre of GENRES) {
    const input = sliderInputs.get(genre)!;
    input.addEventListener('input', () => {
      state = setSlider(state, genre, Number(input.value));
      sync();
    });
  }

  captureButton.addEventListener('click', async () => {
    let tabs = await captureTabs();
    if (tabs === null) {
      tabs = parseManualTabs(manualTabs.value);
      if (!tabs.length) {
        state = { ...state, banner: 'Tab capture unavailable; paste tab URLs above.' };
        sync();
        return;
      }
    }
    const { state: started, seq } = beginRequest(state);
    state = started;
    sync();
    try {
      const guess = await api.inferDestination(tabs);
      state = applyGuess({ ...state, inFlight: false }, guess);
      state = confirmGuess(state); // prefill; typing over it overrides
    } catch (err) {
      const message = err instanceof ApiError ? err.bannerText() : String(err);
      state = applyError(state, seq, message);
    }
    sync();
  });

  submitButton.addEventListener('click', async () => {
    if (!canSubmit(state)) return;
    const body = buildPlanRequest(state);
    const { state: started, seq } = beginRequest(state);
    state = started;
    sync();
    try {
      const record = await api.planTrip(body);
      state = applyPlan(state, seq, record);
    } catch (err) {
      const message = err instanceof ApiError ? err.bannerText() : String(err);
      state = applyError(state, seq, message);
    }
    sync();
  });

  compareButton.addEventListener('click', async () => {
    const currentPlan = state.plan;
    if (!currentPlan || state.inFlight) return;
    const { state: started, seq } = beginRequest(state);
    state = started;
    sync();
    try {
      // compare against a generic regeneration (no preferences)
      const payload = await api.comparePlan(currentPlan.id, null);
      state = applyComparison(state, seq, payload);
    } catch (err) {
      const message = err instanceof ApiError ? err.bannerText() : String(err);
      state = applyError(state, seq, message);
    }
    sync();
  });

  state = setDays(state, Number(daysInput.value) || state.days);
  sync();
}

if (typeof document !== 'undefined' && document.getElementById('roamify-app')) {
  void boot();
}
