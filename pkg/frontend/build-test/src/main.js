/** DOM wiring for the console: one page, two panes, Convert and Speak. */
import { ApiClient } from "./api.js";
import { Controller } from "./controller.js";
async function playWavBlob(data) {
    const blob = new Blob([data], { type: "audio/wav" });
    const url = URL.createObjectURL(blob);
    const audio = new Audio(url);
    try {
        await audio.play();
        await new Promise((resolve) => {
            audio.onended = () => resolve();
            audio.onerror = () => resolve();
        });
    }
    finally {
        URL.revokeObjectURL(url);
    }
}
function element(id) {
    const found = document.getElementById(id);
    if (!found) {
        throw new Error(`missing element #${id}`);
    }
    return found;
}
function render(state) {
    const translationPane = element("translation");
    translationPane.textContent = state.translation;
    const chunksPane = element("chunks");
    chunksPane.replaceChildren(...state.chunks.map((chunk) => {
        const chip = document.createElement("span");
        chip.className = chunk.oov ? "chunk oov" : "chunk";
        chip.title = chunk.oov ? `untranslated (${chunk.role})` : chunk.role;
        chip.textContent = `${chunk.source} → ${chunk.gurmukhi}`;
        return chip;
    }));
    const banner = element("error");
    banner.textContent = state.lastError;
    banner.hidden = state.lastError === "";
    element("language").value = state.languageSelection;
    element("convert").disabled = !controller.canConvert();
    element("speak").disabled = !controller.canSpeak();
    element("busy").hidden = !state.busy;
}
const api = new ApiClient(window.fetch.bind(window));
const controller = new Controller({ api, playAudio: playWavBlob, render });
window.addEventListener("DOMContentLoaded", () => {
    const input = element("input");
    input.addEventListener("input", () => controller.setInput(input.value));
    element("convert").addEventListener("click", () => {
        void controller.convert();
    });
    element("speak").addEventListener("click", () => {
        void controller.speak();
    });
    const language = element("language");
    language.addEventListener("change", () => {
        controller.setLanguage(language.value === "pa" ? "pa" : "en");
    });
    controller.setInput(input.value);
});
