// Service-origin setting, shared by the web app and the extension.
// Prefers chrome.storage, falls back to localStorage, then to memory.

export const DEFAULT_ORIGIN = 'http://127.0.0.1:8765';
const KEY = 'roamify.serviceOrigin';

export interface KeyValueStore {
  get(key: string): Promise<string | null>;
  set(key: string, value: string): Promise<void>;
}

interface ChromeStorageLike {
  storage?: {
    local: {
      get(keys: string[]): Promise<Record<string, unknown>>;
      set(items: Record<string, unknown>): Promise<void>;
    };
  };
}

const memory = new Map<string, string>();

export function defaultStore(): KeyValueStore {
  const chromeApi = (globalThis as { chrome?: ChromeStorageLike }).chrome;
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
  const localStorageRef = (globalThis as { localStorage?: Storage }).localStorage;
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

export async function getServiceOrigin(store: KeyValueStore = defaultStore()): Promise<string> {
  const saved = await store.get(KEY);
  return saved && saved.trim() ? saved.trim().replace(/\/$/, '') : DEFAULT_ORIGIN;
}

export async function setServiceOrigin(
  origin: string,
  store: KeyValueStore = defaultStore(),
): Promise<void> {
  await store.set(KEY, origin.trim().replace(/\/$/, ''));
}
