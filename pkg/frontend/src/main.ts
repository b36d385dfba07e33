/** DOM wiring for the console: one page, two panes, Convert and Speak. */

import { ApiClient, FetchLike } from "./api.js";
import { Controller, UiState } from "./controller.js";

async function playWavBlob(data: ArrayBuffer): Promise<void> {
  const blob = new Blob([data], { type: "audio/wav" });
  const url = URL.createObjectURL(blob);
  const audio = new Audio(url);
  try {
    await audio.play();
    await new Promise<void>((resolve) => {
      audio.onended = () => resolve();
      audio.onerror = () => resolve();
    });
  } finally {
    URL.revokeObjectURL(url);
  }
}

function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
}

function render(state: UiState): void {
  const translationPane = element<HTMLDivElement>("translation");
  translationPane.textContent = state.translation;

  const chunksPane = element<HTMLDivElement>("chunks");
  chunksPane.replaceChildren(
    ...state.chunks.map((chunk) => {
      const chip = document.createElement("span");
      chip.className = chunk.oov ? "chunk oov" : "chunk";
      chip.title = chunk.oov ? `untranslated (${chunk.role})` : chunk.role;
      chip.textContent = `${chunk.source} → ${chunk.gurmukhi}`;
      return chip;
    }),
  );

  const banner = element<HTMLDivElement>("error");
  banner.textContent = state.lastError;
  banner.hidden = state.lastError === "";

  element<HTMLSelectElement>("language").value = state.languageSelection;
  element<HTMLButtonElement>("convert").disabled = !controller.canConvert();
  element<HTMLButtonElement>("speak").disabled = !controller.canSpeak();
  element<HTMLSpanElement>("busy").hidden = !state.busy;
}

const api = new ApiClient(window.fetch.bind(window) as FetchLike);
const controller = new Controller({ api, playAudio: playWavBlob, render });

window.addEventListener("DOMContentLoaded", () => {
  const input = element<HTMLTextAreaElement>("input");
  input.addEventListener("input", () => controller.setInput(input.value));
  element<HTMLButtonElement>("convert").addEventListener("click", () => {
    void controller.convert();
  });
  element<HTMLButtonElement>("speak").addEventListener("click", () => {
    void controller.speak();
  });
  const language = element<HTMLSelectElement>("language");
  language.addEventListener("change", () => {
    controller.setLanguage(language.value === "pa" ? "pa" : "en");
  });
  controller.setInput(input.value);
});
