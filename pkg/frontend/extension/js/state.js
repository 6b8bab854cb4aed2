// UI state and pure transition functions.
//
// The state machine enforces the client-side rules: sliders clamp to 1..5,
// days must be a positive integer before submit, only one request is in
// flight at a time, and responses for superseded requests are discarded
// by sequence number.
export function initialState() {
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
export function clampSlider(value) {
    if (!Number.isFinite(value))
        return 3;
    return Math.min(5, Math.max(1, Math.round(value)));
}
export function setSlider(state, genre, value) {
    return { ...state, sliders: { ...state.sliders, [genre]: clampSlider(value) } };
}
export function setDays(state, value) {
    return { ...state, days: value };
}
export function setDestination(state, destination) {
    return { ...state, destination };
}
export function applyGuess(state, guess) {
    return { ...state, guess };
}
/** The user accepts (or overrides) the inferred destination. */
export function confirmGuess(state, override) {
    const destination = override ?? state.guess?.destination ?? state.destination;
    return { ...state, destination };
}
export function daysError(state) {
    if (!Number.isInteger(state.days) || state.days < 1) {
        return 'Days must be a whole number of at least 1.';
    }
    return null;
}
export function canSubmit(state) {
    return (!state.inFlight &&
        state.destination.trim().length > 0 &&
        daysError(state) === null);
}
export function buildPlanRequest(state) {
    // Slider values go over the wire exactly as displayed.
    return {
        destination: state.destination.trim(),
        days: state.days,
        preferences: { ...state.sliders },
    };
}
export function beginRequest(state) {
    const seq = state.requestSeq + 1;
    return { state: { ...state, requestSeq: seq, inFlight: true, banner: null }, seq };
}
function isStale(state, seq) {
    return seq !== state.requestSeq;
}
export function applyPlan(state, seq, plan) {
    if (isStale(state, seq))
        return state;
    return { ...state, plan, comparison: null, inFlight: false, banner: null };
}
export function applyComparison(state, seq, comparison) {
    if (isStale(state, seq))
        return state;
    return { ...state, comparison, inFlight: false, banner: null };
}
export function applyError(state, seq, message) {
    if (isStale(state, seq))
        return state;
    return { ...state, inFlight: false, banner: message };
}
