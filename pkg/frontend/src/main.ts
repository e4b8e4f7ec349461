import { ApiClient } from "./api";
import { App } from "./dom";

// Same-origin by default; set window.RESUMATCH_API to point elsewhere
// (e.g. "http://127.0.0.1:8000" during development).
declare global {
  interface Window {
    RESUMATCH_API?: string;
  }
}

const api = new ApiClient(window.RESUMATCH_API ?? "");
new App(api).mount();
