/** Browser bootstrap: wires the lookup form to the controller and paints
render() output into the page. No logic lives here that tests need. */

import { ApiClient } from "./api.js";
import { render } from "./render.js";
import { ReportController } from "./state.js";

export function mount(doc: Document, baseUrl = ""): ReportController {
  const view = doc.querySelector("#view");
  const form = doc.querySelector("#lookup-form");
  const input = doc.querySelector("#screen-name");
  if (!(view instanceof HTMLElement) || !(form instanceof HTMLFormElement) || !(input instanceof HTMLInputElement)) {
    throw new Error("expected #view, #lookup-form and #screen-name in the page");
  }

  const api = new ApiClient(baseUrl, (url, init) => fetch(url, init));
  const controller = new ReportController(api, (state) => {
    view.innerHTML = render(state);
  });

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void controller.submit(input.value);
  });
  // Retry buttons are re-created on each render; delegate from the container.
  view.addEventListener("click", (event) => {
    const target = event.target;
    if (target instanceof HTMLElement && target.classList.contains("retry")) {
      void controller.submit(target.dataset.name ?? "");
    }
  });
  setInterval(() => controller.tick(), 1000);

  view.innerHTML = render(controller.current());
  return controller;
}
