// Service-origin setting, shared by the web app and the extension.
// Prefers chrome.storage, falls back to localStorage, then to memory.
export const DEFAULT_ORIGIN = 'http://127.0.0.1:8765';
const KEY = 'roamify.serviceOrigin';
const memory = new Map();
export function defaultStore() {
    const chromeApi = globalThis.chrome;
    if (chromeApi?.storage?.local) {
        const local = chromeApi.storage.local;
        return {
            async get(key) {
                const found = await local.get([key]);
                const value = found[key];
                return typeof value === 'string' ? value : null;
            },
            async set(key, value) {
                await local.set({ [key]: value });
            },
        };
    }
    const localStorageRef = globalThis.localStorage;
    if (localStorageRef) {
        return {
            async get(key) {
                return localStorageRef.getItem(key);
            },
            async set(key, value) {
                localStorageRef.setItem(key, value);
            },
        };
    }
    return {
        async get(key) {
            return memory.get(key) ?? null;
        },
        async set(key, value) {
            memory.set(key, value);
        },
    };
}
export async function getServiceOrigin(store = defaultStore()) {
    const saved = await store.get(KEY);
    return saved && saved.trim() ? saved.trim().replace(/\/$/, '') : DEFAULT_ORIGIN;
}
export async function setServiceOrigin(origin, store = defaultStore()) {
    await store.set(KEY, origin.trim().replace(/\/$/, ''));
}
