// Bootstrap: hash router dispatching to the three screens.

import { HttpApi } from "./api";
import { clearSession, loadSession, saveSession } from "./session";
import { AdminView } from "./views/admin";
import { LabellingView } from "./views/labelling";
import { LoginView } from "./views/login";
import { MyResponsesView } from "./views/responses";

declare global {
  interface Window {
    LABELSMITH_API?: string;
  }
}

const apiBase = window.LABELSMITH_API ?? "";
const api = new HttpApi(apiBase, () => loadSession()?.token ?? null);

function navigate(hash: string): void {
  window.location.hash = hash;
}

async function route(): Promise<void> {
  const root = document.getElementById("app")!;
  const session = loadSession();
  if (!session) {
    const login = new LoginView(api, (auth) => {
      saveSession({ token: auth.token, user: auth.user });
      navigate("#/label");
      void route();
    });
    await login.mount(root);
    renderChrome(null);
    return;
  }
  renderChrome(session.user.display_name);

  const hash = window.location.hash || "#/label";
  const [, screen, argument] = hash.split("/");
  try {
    if (screen === "label") {
      await new LabellingView(api, session.user).mount(root, argument);
    } else if (screen === "responses") {
      await new MyResponsesView(api, navigate).mount(root);
    } else if (screen === "admin") {
      if (session.user.role !== "admin") {
        navigate("#/label");
        return;
      }
      await new AdminView(api).mount(root, (argument as never) || "users");
    } else {
      navigate("#/label");
    }
  } catch (error) {
    const status = (error as { status?: number }).status;
    if (status === 401) {
      clearSession();
      void route();
      return;
    }
    root.innerHTML = `<p class="fatal-error">${(error as Error).message}</p>`;
  }
}

function renderChrome(userName: string | null): void {
  const chrome = document.getElementById("chrome")!;
  if (!userName) {
    chrome.innerHTML = "";
    return;
  }
  chrome.innerHTML = `
    <nav class="top-nav">
      <a href="#/label">Labelling</a>
      <a href="#/responses">My Responses</a>
      <a href="#/admin">Admin</a>
      <span class="spacer"></span>
      <span class="whoami"></span>
      <button type="button" class="sign-out">Sign out</button>
    </nav>
  `;
  chrome.querySelector<HTMLElement>(".whoami")!.textContent = userName;
  chrome.querySelector<HTMLButtonElement>(".sign-out")!.addEventListener("click", () => {
    clearSession();
    navigate("#/");
    void route();
  });
}

window.addEventListener("hashchange", () => void route());
void route();
