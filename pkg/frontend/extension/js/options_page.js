// Options page: configure which service origin the UI talks to.
import { DEFAULT_ORIGIN, getServiceOrigin, setServiceOrigin } from './options.js';
async function boot() {
    const input = document.getElementById('service-origin');
    const saveButton = document.getElementById('save');
    const status = document.getElementById('status');
    input.placeholder = DEFAULT_ORIGIN;
    input.value = await getServiceOrigin();
    saveButton.addEventListener('click', async () => {
        await setServiceOrigin(input.value || DEFAULT_ORIGIN);
        status.textContent = `Saved. Using ${await getServiceOrigin()}`;
    });
}
if (typeof document !== 'undefined' && document.getElementById('service-origin')) {
    void boot();
}
