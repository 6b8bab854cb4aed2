// Thin client over the service JSON API.
export class ApiError extends Error {
    status;
    stage;
    constructor(message, status, stage) {
        super(message);
        this.status = status;
        this.stage = stage;
    }
    /** Text for the error banner; stage failures name the stage. */
    bannerText() {
        return this.stage ? `${this.stage}: ${this.message}` : this.message;
    }
}
export class ApiClient {
    origin;
    fetchFn;
    constructor(origin, fetchFn = (url, init) => fetch(url, init)) {
        this.origin = origin;
        this.fetchFn = fetchFn;
    }
    async request(method, path, body) {
        let response;
        try {
            response = await this.fetchFn(`${this.origin}${path}`, {
                method,
                headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
                body: body === undefined ? undefined : JSON.stringify(body),
            });
        }
        catch (err) {
            throw new ApiError(`service unreachable: ${String(err)}`, 0);
        }
        if (!response.ok) {
            let message = `HTTP ${response.status}`;
            let stage;
            try {
                const payload = await response.json();
                if (payload?.error?.message)
                    message = payload.error.message;
                if (payload?.error?.stage)
                    stage = payload.error.stage;
            }
            catch {
                // non-JSON error body; keep the status text
            }
            throw new ApiError(message, response.status, stage);
        }
        return (await response.json());
    }
    planTrip(body) {
        return this.request('POST', '/api/plan', body);
    }
    getPlan(id) {
        return this.request('GET', `/api/plan/${encodeURIComponent(id)}`);
    }
    listPlans() {
        return this.request('GET', '/api/plans');
    }
    comparePlan(id, preferences) {
        const body = preferences === null ? {} : { preferences };
        return this.request('POST', `/api/plan/${encodeURIComponent(id)}/compare`, body);
    }
    inferDestination(tabs) {
        return this.request('POST', '/api/infer', { tabs });
    }
    health() {
        return this.request('GET', '/api/health');
    }
}
