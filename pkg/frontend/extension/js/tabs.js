// Open-tab capture: chrome.tabs in the extension, manual paste elsewhere.
function defaultChrome() {
    return globalThis.chrome;
}
/**
 * Returns the open http(s) tabs, or null when tab capture is unavailable
 * (no extension context, or the tabs permission was denied) — the caller
 * then falls back to the manual URL box.
 */
export async function captureTabs(chromeApi = defaultChrome()) {
    if (!chromeApi?.tabs?.query)
        return null;
    try {
        const tabs = await chromeApi.tabs.query({});
        return tabs
            .filter((tab) => typeof tab.url === 'string' && /^https?:\/\//.test(tab.url))
            .map((tab) => ({ url: tab.url, title: tab.title ?? '' }));
    }
    catch {
        return null;
    }
}
/** One URL per line; lines that are not http(s) URLs are ignored. */
export function parseManualTabs(text) {
    return text
        .split('\n')
        .map((line) => line.trim())
        .filter((line) => /^https?:\/\/\S+$/.test(line))
        .map((url) => ({ url, title: '' }));
}
